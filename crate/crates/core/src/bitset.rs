//! Word-slice bit helpers shared by the solvers.

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn get(words: &[u64], bit: usize) -> bool {
    words[bit / WORD_BITS] & (1 << (bit % WORD_BITS)) != 0
}

#[inline]
pub(crate) fn set(words: &mut [u64], bit: usize) {
    words[bit / WORD_BITS] |= 1 << (bit % WORD_BITS);
}

#[inline]
pub(crate) fn clear(words: &mut [u64], bit: usize) {
    words[bit / WORD_BITS] &= !(1 << (bit % WORD_BITS));
}

#[inline]
pub(crate) fn first_set(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .position(|&w| w != 0)
        .map(|i| i * WORD_BITS + words[i].trailing_zeros() as usize)
}

#[inline]
pub(crate) fn first_clear(words: &[u64]) -> usize {
    match words.iter().position(|&w| w != u64::MAX) {
        Some(i) => i * WORD_BITS + (!words[i]).trailing_zeros() as usize,
        None => words.len() * WORD_BITS,
    }
}

/// Sets bits `0..bits` and clears the rest.
pub(crate) fn fill_prefix(words: &mut [u64], bits: usize) {
    for (i, w) in words.iter_mut().enumerate() {
        let lo = i * WORD_BITS;
        *w = if bits >= lo + WORD_BITS {
            u64::MAX
        } else if bits > lo {
            (1u64 << (bits - lo)) - 1
        } else {
            0
        };
    }
}

pub(crate) fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i * WORD_BITS + b)
        })
    })
}

//! Packed bit-vector helpers shared by truth tables and the column
//! simulator. Bit `a` of a vector lives at word `a >> 6`, position `a & 63`.

/// `VAR_MASKS[b]` has bit `i` set iff bit `b` of `i` is set, for `b < 6`.
pub const VAR_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// Number of 64-bit words needed to hold `bits` bits (at least one word).
pub fn words_for(bits: u64) -> usize {
    (((bits + 63) >> 6) as usize).max(1)
}

/// Mask of the valid bits in the last word of a `bits`-bit vector.
pub fn tail_mask(bits: u64) -> u64 {
    match bits & 63 {
        0 => !0,
        r => (1u64 << r) - 1,
    }
}

pub fn get(words: &[u64], a: u64) -> bool {
    (words[(a >> 6) as usize] >> (a & 63)) & 1 == 1
}

pub fn set(words: &mut [u64], a: u64, value: bool) {
    let w = &mut words[(a >> 6) as usize];
    if value {
        *w |= 1 << (a & 63);
    } else {
        *w &= !(1 << (a & 63));
    }
}

/// Word `word_idx` of the pattern whose bit `a` equals bit `var_bit` of `a`.
///
/// This is the column a free input variable contributes when all
/// assignments are enumerated in index order.
pub fn var_pattern_word(var_bit: u32, word_idx: usize) -> u64 {
    if var_bit < 6 {
        VAR_MASKS[var_bit as usize]
    } else if (word_idx >> (var_bit - 6)) & 1 == 1 {
        !0
    } else {
        0
    }
}

/// In-place GF(2) Mobius transform (subset XOR sums) over a packed vector of
/// `1 << n` bits. The transform is an involution, so it converts a truth
/// table to its ANF coefficient vector and back.
pub fn mobius_in_place(words: &mut [u64], n: u32) {
    debug_assert_eq!(words.len(), words_for(1u64 << n));
    for b in 0..n.min(6) {
        let shift = 1u32 << b;
        let mask = VAR_MASKS[b as usize];
        for w in words.iter_mut() {
            *w ^= (*w << shift) & mask;
        }
    }
    for b in 6..n {
        let stride = 1usize << (b - 6);
        let mut base = 0;
        while base < words.len() {
            for j in base..base + stride {
                words[j + stride] ^= words[j];
            }
            base += 2 * stride;
        }
    }
    if n < 6 {
        // Padding bits above 2^n must stay clear.
        words[0] &= tail_mask(1 << n);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mobius_naive(bits: &[bool]) -> Vec<bool> {
        let len = bits.len();
        let mut out = vec![false; len];
        for (s, slot) in out.iter_mut().enumerate() {
            let mut acc = false;
            for (t, &b) in bits.iter().enumerate() {
                if t & s == t {
                    acc ^= b;
                }
            }
            *slot = acc;
        }
        out
    }

    #[test]
    fn mobius_matches_naive_subset_sum() {
        let mut state = 0x243f_6a88_85a3_08d3u64; // xorshift seed
        for n in 0..=9u32 {
            let len = 1u64 << n;
            let mut words = vec![0u64; words_for(len)];
            for a in 0..len {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                set(&mut words, a, state & 1 == 1);
            }
            let bits: Vec<bool> = (0..len).map(|a| get(&words, a)).collect();
            let expect = mobius_naive(&bits);
            mobius_in_place(&mut words, n);
            for a in 0..len {
                assert_eq!(get(&words, a), expect[a as usize], "n={n} a={a}");
            }
        }
    }

    #[test]
    fn mobius_is_an_involution() {
        for n in 1..=8u32 {
            let len = 1u64 << n;
            let mut words = vec![0u64; words_for(len)];
            for a in 0..len {
                set(&mut words, a, (a * a + 3 * a) % 7 < 3);
            }
            let orig = words.clone();
            mobius_in_place(&mut words, n);
            mobius_in_place(&mut words, n);
            assert_eq!(words, orig, "n={n}");
        }
    }

    #[test]
    fn var_pattern_words_enumerate_assignments() {
        for var_bit in 0..10u32 {
            for a in 0..1u64 << 10 {
                let w = var_pattern_word(var_bit, (a >> 6) as usize);
                let bit = (w >> (a & 63)) & 1 == 1;
                assert_eq!(bit, (a >> var_bit) & 1 == 1);
            }
        }
    }
}

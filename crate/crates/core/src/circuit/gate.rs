use crate::{Error, Result};

/// A mixed-polarity multiple-control Toffoli gate.
///
/// The target line flips iff every positive control reads 1 and every
/// negative control reads 0. No controls is a NOT, one positive control a
/// CNOT, two a Toffoli. Every such gate is its own inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpmctGate {
    target: u32,
    pos: Vec<u32>,
    neg: Vec<u32>,
}

impl MpmctGate {
    /// Builds a gate, sorting the control lists and checking that the
    /// target and both control sets are pairwise disjoint.
    pub fn new(target: u32, mut pos: Vec<u32>, mut neg: Vec<u32>) -> Result<Self> {
        pos.sort_unstable();
        neg.sort_unstable();
        if pos.windows(2).any(|w| w[0] == w[1]) || neg.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadGate("repeated control line".into()));
        }
        if pos.binary_search(&target).is_ok() || neg.binary_search(&target).is_ok() {
            return Err(Error::BadGate(format!("target {target} is also a control")));
        }
        let mut i = 0;
        for &p in &pos {
            while i < neg.len() && neg[i] < p {
                i += 1;
            }
            if i < neg.len() && neg[i] == p {
                return Err(Error::BadGate(format!(
                    "line {p} is both a positive and a negative control"
                )));
            }
        }
        Ok(MpmctGate { target, pos, neg })
    }

    pub fn not(target: u32) -> Self {
        MpmctGate {
            target,
            pos: Vec::new(),
            neg: Vec::new(),
        }
    }

    pub fn cnot(control: u32, target: u32) -> Self {
        Self::new(target, vec![control], Vec::new()).expect("distinct lines")
    }

    pub fn toffoli(c0: u32, c1: u32, target: u32) -> Self {
        Self::new(target, vec![c0, c1], Vec::new()).expect("distinct lines")
    }

    /// Positive-control MCT gate.
    pub fn mct(controls: Vec<u32>, target: u32) -> Result<Self> {
        Self::new(target, controls, Vec::new())
    }

    pub fn target(&self) -> u32 {
        self.target
    }

    pub fn pos_controls(&self) -> &[u32] {
        &self.pos
    }

    pub fn neg_controls(&self) -> &[u32] {
        &self.neg
    }

    pub fn control_count(&self) -> usize {
        self.pos.len() + self.neg.len()
    }

    /// Largest line index the gate touches.
    pub fn max_line(&self) -> u32 {
        self.pos
            .iter()
            .chain(&self.neg)
            .copied()
            .fold(self.target, u32::max)
    }

    /// Whether the control condition holds in `state`.
    pub fn fires(&self, state: &[bool]) -> bool {
        self.pos.iter().all(|&l| state[l as usize])
            && self.neg.iter().all(|&l| !state[l as usize])
    }

    /// Applies the gate to a state in place.
    pub fn apply(&self, state: &mut [bool]) {
        if self.fires(state) {
            state[self.target as usize] ^= true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cnot_flips_target_when_control_set() {
        let g = MpmctGate::cnot(0, 1);
        let mut s = vec![true, false];
        g.apply(&mut s);
        assert_eq!(s, vec![true, true]);
        let mut s = vec![false, false];
        g.apply(&mut s);
        assert_eq!(s, vec![false, false]);
    }

    #[test]
    fn toffoli_needs_both_controls() {
        let g = MpmctGate::toffoli(0, 1, 2);
        let mut s = vec![true, true, false];
        g.apply(&mut s);
        assert_eq!(s, vec![true, true, true]);
        let mut s = vec![true, false, false];
        g.apply(&mut s);
        assert_eq!(s, vec![true, false, false]);
    }

    #[test]
    fn not_always_fires() {
        let g = MpmctGate::not(0);
        let mut s = vec![false];
        g.apply(&mut s);
        assert_eq!(s, vec![true]);
    }

    #[test]
    fn negative_controls_require_zero() {
        let g = MpmctGate::new(2, vec![0], vec![1]).unwrap();
        let mut s = vec![true, false, false];
        g.apply(&mut s);
        assert_eq!(s, vec![true, false, true]);
        let mut s = vec![true, true, false];
        g.apply(&mut s);
        assert_eq!(s, vec![true, true, false]);
    }

    #[test]
    fn overlapping_lines_are_rejected() {
        assert!(MpmctGate::new(0, vec![0], vec![]).is_err());
        assert!(MpmctGate::new(2, vec![1], vec![1]).is_err());
        assert!(MpmctGate::new(2, vec![1, 1], vec![]).is_err());
    }

    #[test]
    fn every_gate_is_an_involution() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let width = rng.random_range(1..=10u32);
            let target = rng.random_range(0..width);
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            for l in 0..width {
                if l == target {
                    continue;
                }
                match rng.random_range(0..3) {
                    0 => pos.push(l),
                    1 => neg.push(l),
                    _ => {}
                }
            }
            let g = MpmctGate::new(target, pos, neg).unwrap();
            for a in 0..1u32 << width {
                let mut s: Vec<bool> = (0..width).map(|l| (a >> l) & 1 == 1).collect();
                let orig = s.clone();
                g.apply(&mut s);
                g.apply(&mut s);
                assert_eq!(s, orig);
            }
        }
    }
}

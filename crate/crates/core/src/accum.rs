//! Compensated summation.
//!
//! Series over the lattice tree add up hundreds of millions of terms spanning
//! many orders of magnitude, so plain floating addition loses digits long
//! before the truncation error matters. The default accumulator uses
//! Neumaier's variant of Kahan summation: one extra add per term buys an
//! error bound independent of term count.

/// How an [`Accumulator`] adds terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AccumulationMode {
    /// Neumaier compensated summation (default).
    #[default]
    Compensated,
    /// Plain f64 addition, for measuring what compensation buys.
    Plain,
}

/// A running sum with optional error compensation.
#[derive(Debug, Clone, Copy)]
pub struct Accumulator {
    mode: AccumulationMode,
    sum: f64,
    comp: f64,
}

impl Accumulator {
    pub fn new(mode: AccumulationMode) -> Self {
        Accumulator {
            mode,
            sum: 0.0,
            comp: 0.0,
        }
    }

    pub fn mode(&self) -> AccumulationMode {
        self.mode
    }

    /// Add one term.
    #[inline]
    pub fn add(&mut self, x: f64) {
        match self.mode {
            AccumulationMode::Plain => self.sum += x,
            AccumulationMode::Compensated => {
                let t = self.sum + x;
                if self.sum.abs() >= x.abs() {
                    self.comp += (self.sum - t) + x;
                } else {
                    self.comp += (x - t) + self.sum;
                }
                self.sum = t;
            }
        }
    }

    /// Fold another accumulator into this one, preserving its compensation.
    pub fn merge(&mut self, other: &Accumulator) {
        self.add(other.sum);
        self.add(other.comp);
    }

    /// The current value of the sum.
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_beats_plain_on_ill_conditioned_input() {
        // 1 followed by many tiny terms that individually vanish against it.
        let tiny = 1e-16;
        let n = 100_000;
        let mut comp = Accumulator::new(AccumulationMode::Compensated);
        let mut plain = Accumulator::new(AccumulationMode::Plain);
        comp.add(1.0);
        plain.add(1.0);
        for _ in 0..n {
            comp.add(tiny);
            plain.add(tiny);
        }
        let exact = 1.0 + tiny * n as f64;
        assert!((comp.value() - exact).abs() < 1e-15);
        // Plain addition drops every tiny term here.
        assert_eq!(plain.value(), 1.0);
    }

    #[test]
    fn merge_matches_single_stream() {
        let xs: Vec<f64> = (1..=1000).map(|k| 1.0 / (k as f64 * k as f64)).collect();
        let mut whole = Accumulator::new(AccumulationMode::Compensated);
        for &x in &xs {
            whole.add(x);
        }
        let mut left = Accumulator::new(AccumulationMode::Compensated);
        let mut right = Accumulator::new(AccumulationMode::Compensated);
        for &x in &xs[..500] {
            left.add(x);
        }
        for &x in &xs[500..] {
            right.add(x);
        }
        left.merge(&right);
        assert!((left.value() - whole.value()).abs() < 1e-15);
    }

    #[test]
    fn default_mode_is_compensated() {
        assert_eq!(AccumulationMode::default(), AccumulationMode::Compensated);
    }
}

use crate::{Complex64, Error, Result};

/// Square QAM constellation with a Gray-coded bit labelling.
#[derive(Debug, Clone, PartialEq)]
pub struct Constellation {
    points: Vec<Complex64>,
    labels: Vec<u32>,
    bits_per_symbol: u32,
    average_power: f64,
}

impl Constellation {
    /// Builds the square grid `levels × levels` (in-phase × quadrature).
    ///
    /// `levels` must be strictly increasing with a power-of-two count of at
    /// least two. Each axis is Gray coded on the level index; the in-phase bits
    /// form the high half of the label.
    pub fn square(levels: &[f64]) -> Result<Self> {
        let m = levels.len();
        if m < 2 || !m.is_power_of_two() {
            return Err(Error::domain(format!("need a power-of-two number of levels (≥ 2), got {m}")));
        }
        if levels.iter().any(|v| !v.is_finite()) || levels.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::domain("levels must be finite and strictly increasing"));
        }
        let axis_bits = m.trailing_zeros();
        let gray = |i: usize| (i ^ (i >> 1)) as u32;
        let mut points = Vec::with_capacity(m * m);
        let mut labels = Vec::with_capacity(m * m);
        for (i, &re) in levels.iter().enumerate() {
            for (q, &im) in levels.iter().enumerate() {
                points.push(Complex64::new(re, im));
                labels.push((gray(i) << axis_bits) | gray(q));
            }
        }
        let average_power = points.iter().map(|p| p.norm_sqr()).sum::<f64>() / points.len() as f64;
        if !(average_power > 0.0) {
            return Err(Error::domain("constellation has zero average power"));
        }
        Ok(Self {
            points,
            labels,
            bits_per_symbol: 2 * axis_bits,
            average_power,
        })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn bits_per_symbol(&self) -> u32 {
        self.bits_per_symbol
    }

    /// Gray label of point `index`.
    pub fn label(&self, index: usize) -> u32 {
        self.labels[index]
    }

    /// Bits of point `index`, most significant first.
    pub fn bits(&self, index: usize) -> impl Iterator<Item = bool> + '_ {
        let label = self.labels[index];
        (0..self.bits_per_symbol).rev().map(move |b| (label >> b) & 1 == 1)
    }

    /// Mean `|point|²`.
    pub fn average_power(&self) -> f64 {
        self.average_power
    }
}

/// Gray-coded 16-QAM on `{±1, ±3} × {±1, ±3}`; average power 10.
pub fn make_16qam() -> Constellation {
    Constellation::square(&[-3.0, -1.0, 1.0, 3.0]).expect("fixed 16-QAM levels are valid")
}

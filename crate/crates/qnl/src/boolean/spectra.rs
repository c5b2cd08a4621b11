//! Spectral transforms: the Walsh-Hadamard butterfly, mixed transforms with
//! quarter-turn (nega) axes, and exact peak-to-average power ratios.
//!
//! A transform is chosen per axis: fixed (identity), Hadamard, or
//! nega-Hadamard. `mu` masks the fixed axes and `c ⪯ mu-bar` the nega axes.
//! All values are unnormalized; the `2^{-(n-wt(mu))/2}` factor enters only
//! through the exact dyadic normalization of squared magnitudes.

use super::mask::{full_bits, Mask};
use super::truth_table::TruthTable;
use super::BooleanError;
use crate::exact::{Dyadic, GaussianInt};

/// Cap for the full mixed-transform sweep (`3^n` transforms).
pub const MAX_PAR_IHN_N: usize = 10;
/// Cap for the Hadamard-only sweep (`2^n` transforms).
pub const MAX_PAR_IH_N: usize = 14;

impl TruthTable {
    /// Unnormalized Walsh-Hadamard spectrum: index `b` holds
    /// `sum_x (-1)^{f(x) + b.x}`. In-place butterfly, `O(n 2^n)`.
    pub fn wht(&self) -> Vec<i64> {
        let mut values: Vec<i64> = (0..self.len() as u32).map(|x| self.sign(x)).collect();
        let mut h = 1;
        while h < values.len() {
            let mut i = 0;
            while i < values.len() {
                for j in i..i + h {
                    let a = values[j];
                    let b = values[j + h];
                    values[j] = a + b;
                    values[j + h] = a - b;
                }
                i += 2 * h;
            }
            h *= 2;
        }
        values
    }

    /// Hadamard butterflies on the axes outside `mu` only. Index `y` holds
    /// the spectrum value with output index `y & !mu` and fixed coordinates
    /// `y & mu`.
    pub fn partial_wht(&self, mu: Mask) -> Result<Vec<i64>, BooleanError> {
        self.check_dim(&mu)?;
        let mut values: Vec<i64> = (0..self.len() as u32).map(|x| self.sign(x)).collect();
        for axis in 0..self.n() {
            if mu.bits() >> axis & 1 == 1 {
                continue;
            }
            butterfly_axis(&mut values, axis, |a, b| (a + b, a - b));
        }
        Ok(values)
    }

    /// Mixed transform: Hadamard on axes outside `mu | c`, nega-Hadamard on
    /// the axes of `c`, identity on `mu`. Layout as in [`TruthTable::partial_wht`].
    pub fn ihn_partial_transform(
        &self,
        mu: Mask,
        c: Mask,
    ) -> Result<Vec<GaussianInt>, BooleanError> {
        self.check_dim(&mu)?;
        self.check_dim(&c)?;
        if !c.preceq(&mu.complement()) {
            return Err(BooleanError::NotSubmask {
                inner: "c",
                outer: "mu-bar",
            });
        }
        let mut values: Vec<GaussianInt> = (0..self.len() as u32)
            .map(|x| GaussianInt::from(self.sign(x)))
            .collect();
        for axis in 0..self.n() {
            if mu.bits() >> axis & 1 == 1 {
                continue;
            }
            if c.bits() >> axis & 1 == 1 {
                butterfly_axis(&mut values, axis, |a, b| {
                    (a + b.mul_i_pow(1), a - b.mul_i_pow(1))
                });
            } else {
                butterfly_axis(&mut values, axis, |a, b| (a + b, a - b));
            }
        }
        Ok(values)
    }

    /// One unnormalized mixed-spectrum value
    /// `sum_{x & mu = r} (-1)^{f(x) + k.x} i^{wt(x & c)}`;
    /// requires `k, c ⪯ mu-bar` and `r ⪯ mu`.
    pub fn ihn_spectrum(
        &self,
        k: Mask,
        c: Mask,
        r: Mask,
        mu: Mask,
    ) -> Result<GaussianInt, BooleanError> {
        for m in [&k, &c, &r, &mu] {
            self.check_dim(m)?;
        }
        let mu_bar = mu.complement();
        if !k.preceq(&mu_bar) {
            return Err(BooleanError::NotSubmask {
                inner: "k",
                outer: "mu-bar",
            });
        }
        if !c.preceq(&mu_bar) {
            return Err(BooleanError::NotSubmask {
                inner: "c",
                outer: "mu-bar",
            });
        }
        if !r.preceq(&mu) {
            return Err(BooleanError::NotSubmask {
                inner: "r",
                outer: "mu",
            });
        }
        let space = mu_bar.bits();
        let mut acc = GaussianInt::ZERO;
        let mut sub = space;
        loop {
            let x = r.bits() | sub;
            let sign = self.sign(x) * (1 - 2 * ((x & k.bits()).count_ones() as i64 & 1));
            acc = acc + GaussianInt::from(sign).mul_i_pow((x & c.bits()).count_ones() as i64);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & space;
        }
        Ok(acc)
    }

    /// One Hadamard-only spectrum value
    /// `sum_{x & mu = k} (-1)^{f(x) + u.x}`; requires `k ⪯ mu`.
    pub fn ih_spectrum(&self, u: Mask, k: Mask, mu: Mask) -> Result<i64, BooleanError> {
        for m in [&u, &k, &mu] {
            self.check_dim(m)?;
        }
        if !k.preceq(&mu) {
            return Err(BooleanError::NotSubmask {
                inner: "k",
                outer: "mu",
            });
        }
        let space = !mu.bits() & full_bits(self.n());
        let mut acc = 0i64;
        let mut sub = space;
        loop {
            let x = k.bits() | sub;
            acc += self.sign(x) * (1 - 2 * ((x & u.bits()).count_ones() as i64 & 1));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & space;
        }
        Ok(acc)
    }

    /// Peak-to-average power ratio over all `3^n` mixed transforms: the
    /// maximum of `|value|^2 / 2^{n - wt(mu)}` as an exact dyadic rational.
    pub fn par_ihn(&self) -> Result<Dyadic, BooleanError> {
        if self.n() > MAX_PAR_IHN_N {
            return Err(BooleanError::TooLarge {
                n: self.n(),
                limit: MAX_PAR_IHN_N,
            });
        }
        let full = full_bits(self.n());
        let mut best = Dyadic::ZERO;
        for mu in 0..=full {
            let mu_mask = Mask::new(self.n(), mu).unwrap();
            let norm = (self.n() - mu_mask.weight() as usize) as u32;
            let space = !mu & full;
            let mut c = space;
            loop {
                let arr = self
                    .ihn_partial_transform(mu_mask, Mask::new(self.n(), c).unwrap())
                    .expect("c ⪯ mu-bar by construction");
                for value in arr {
                    best = best.max(Dyadic::new(value.norm_sq() as u128, norm));
                }
                if c == 0 {
                    break;
                }
                c = (c - 1) & space;
            }
            if mu == full {
                break;
            }
        }
        Ok(best)
    }

    /// Peak-to-average power ratio restricted to transforms without nega
    /// axes.
    pub fn par_ih(&self) -> Result<Dyadic, BooleanError> {
        if self.n() > MAX_PAR_IH_N {
            return Err(BooleanError::TooLarge {
                n: self.n(),
                limit: MAX_PAR_IH_N,
            });
        }
        let full = full_bits(self.n());
        let mut best = Dyadic::ZERO;
        for mu in 0..=full {
            let mu_mask = Mask::new(self.n(), mu).unwrap();
            let norm = (self.n() - mu_mask.weight() as usize) as u32;
            let arr = self.partial_wht(mu_mask)?;
            for value in arr {
                best = best.max(Dyadic::new((value * value) as u128, norm));
            }
            if mu == full {
                break;
            }
        }
        Ok(best)
    }
}

fn butterfly_axis<T: Copy>(values: &mut [T], axis: usize, op: impl Fn(T, T) -> (T, T)) {
    let h = 1usize << axis;
    let mut i = 0;
    while i < values.len() {
        for j in i..i + h {
            let (a, b) = op(values[j], values[j + h]);
            values[j] = a;
            values[j + h] = b;
        }
        i += 2 * h;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::clique;
    use crate::rng::SplitMix64;

    fn mask(n: usize, bits: u32) -> Mask {
        Mask::new(n, bits).unwrap()
    }

    fn random_table(rng: &mut SplitMix64, n: usize) -> TruthTable {
        TruthTable::from_fn(n, |_| rng.next_u64() & 1 == 1).unwrap()
    }

    #[test]
    fn wht_delta_for_constant() {
        let t = TruthTable::constant_zero(1).unwrap();
        assert_eq!(t.wht(), vec![2, 0]);
    }

    #[test]
    fn wht_k2_four_term_sums() {
        let t = TruthTable::from_graph(&clique(2)).unwrap();
        assert_eq!(t.wht(), vec![2, 2, 2, -2]);
    }

    #[test]
    fn wht_matches_naive_and_parseval_holds() {
        let mut rng = SplitMix64::new(101);
        for n in 1..=10usize {
            for _ in 0..10 {
                let t = random_table(&mut rng, n);
                let spectrum = t.wht();
                if n <= 6 {
                    for b in 0..1u32 << n {
                        let direct: i64 = (0..1u32 << n)
                            .map(|x| t.sign(x) * (1 - 2 * ((x & b).count_ones() as i64 & 1)))
                            .sum();
                        assert_eq!(spectrum[b as usize], direct);
                    }
                }
                let energy: i64 = spectrum.iter().map(|w| w * w).sum();
                assert_eq!(energy, 1 << (2 * n));
            }
        }
    }

    #[test]
    fn partial_wht_matches_direct_coset_sums() {
        let mut rng = SplitMix64::new(103);
        for n in 1..=7usize {
            let t = random_table(&mut rng, n);
            for _ in 0..8 {
                let mu = (rng.next_u64() as u32) & full_bits(n);
                let arr = t.partial_wht(mask(n, mu)).unwrap();
                for y in 0..1u32 << n {
                    let u = y & !mu & full_bits(n);
                    let r = y & mu;
                    let direct: i64 = (0..1u32 << n)
                        .filter(|x| x & mu == r)
                        .map(|x| t.sign(x) * (1 - 2 * ((x & u).count_ones() as i64 & 1)))
                        .sum();
                    assert_eq!(arr[y as usize], direct);
                }
            }
        }
    }

    #[test]
    fn ihn_transform_matches_single_point_sums() {
        let mut rng = SplitMix64::new(107);
        for n in 1..=6usize {
            let t = random_table(&mut rng, n);
            for _ in 0..8 {
                let mu = (rng.next_u64() as u32) & full_bits(n);
                let space = !mu & full_bits(n);
                let c = (rng.next_u64() as u32) & space;
                let arr = t.ihn_partial_transform(mask(n, mu), mask(n, c)).unwrap();
                for y in 0..1u32 << n {
                    let got = arr[y as usize];
                    let want = t
                        .ihn_spectrum(mask(n, y & space), mask(n, c), mask(n, y & mu), mask(n, mu))
                        .unwrap();
                    assert_eq!(got, want, "n={n} mu={mu:b} c={c:b} y={y:b}");
                }
            }
        }
    }

    #[test]
    fn ihn_point_examples() {
        for n in 1..=4usize {
            let t = TruthTable::constant_zero(n).unwrap();
            let z = Mask::zero(n);
            assert_eq!(
                t.ihn_spectrum(z, z, z, z).unwrap(),
                GaussianInt::from(1i64 << n)
            );
        }
        // One nega axis on the constant function: 1 + i.
        let t = TruthTable::constant_zero(1).unwrap();
        let z = Mask::zero(1);
        assert_eq!(
            t.ihn_spectrum(z, Mask::full(1), z, z).unwrap(),
            GaussianInt::new(1, 1)
        );
    }

    #[test]
    fn ihn_rejects_overlapping_masks() {
        let t = TruthTable::constant_zero(3).unwrap();
        let err = t
            .ihn_spectrum(mask(3, 0b001), mask(3, 0), mask(3, 0), mask(3, 0b001))
            .unwrap_err();
        assert!(matches!(
            err,
            BooleanError::NotSubmask {
                inner: "k",
                outer: "mu-bar"
            }
        ));
    }

    #[test]
    fn ih_spectrum_reduces_to_wht() {
        let mut rng = SplitMix64::new(109);
        for n in 1..=8usize {
            let t = random_table(&mut rng, n);
            let spectrum = t.wht();
            for _ in 0..10 {
                let u = (rng.next_u64() as u32) & full_bits(n);
                assert_eq!(
                    t.ih_spectrum(mask(n, u), Mask::zero(n), Mask::zero(n))
                        .unwrap(),
                    spectrum[u as usize]
                );
            }
            // mu = all-ones: single signed term.
            let k = (rng.next_u64() as u32) & full_bits(n);
            let got = t
                .ih_spectrum(Mask::zero(n), mask(n, k), Mask::full(n))
                .unwrap();
            assert_eq!(got, t.sign(k));
        }
    }

    #[test]
    fn par_values_for_simple_functions() {
        let t = TruthTable::constant_zero(1).unwrap();
        assert_eq!(t.par_ihn().unwrap(), Dyadic::from_integer(2));
        assert_eq!(t.par_ih().unwrap(), Dyadic::from_integer(2));
        // Cliques have Hadamard-only peak 2 regardless of size.
        for n in 2..=7usize {
            let t = TruthTable::from_graph(&clique(n)).unwrap();
            assert_eq!(t.par_ih().unwrap(), Dyadic::from_integer(2), "K_{n}");
        }
    }

    #[test]
    fn par_is_at_least_one() {
        let mut rng = SplitMix64::new(113);
        for n in 1..=6usize {
            let t = random_table(&mut rng, n);
            assert!(t.par_ihn().unwrap() >= Dyadic::from_integer(1));
            assert!(t.par_ih().unwrap() >= Dyadic::from_integer(1));
        }
    }

    /// Full `3^n * 2^n` reference maximization with direct Gaussian sums.
    fn naive_par_ihn(t: &TruthTable) -> Dyadic {
        let n = t.n();
        let full = full_bits(n);
        let mut best = Dyadic::ZERO;
        for mu in 0..=full {
            let space = !mu & full;
            let mut c = space;
            loop {
                for y in 0..=full {
                    let mut acc = GaussianInt::ZERO;
                    for x in 0..=full {
                        if x & mu != y & mu {
                            continue;
                        }
                        let sign = t.sign(x) * (1 - 2 * ((x & y & space).count_ones() as i64 & 1));
                        acc = acc + GaussianInt::from(sign).mul_i_pow((x & c).count_ones() as i64);
                    }
                    best = best.max(Dyadic::new(
                        acc.norm_sq() as u128,
                        (n as u32) - mu.count_ones(),
                    ));
                }
                if c == 0 {
                    break;
                }
                c = (c - 1) & space;
            }
            if mu == full {
                break;
            }
        }
        best
    }

    #[test]
    fn par_ihn_matches_naive_maximization() {
        let mut rng = SplitMix64::new(127);
        for n in 1..=6usize {
            // Random quadratics and raw random tables both.
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.next_u64() & 1 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = crate::graph::Graph::from_edges(n, &edges).unwrap();
            let quad = TruthTable::from_graph(&g).unwrap();
            assert_eq!(quad.par_ihn().unwrap(), naive_par_ihn(&quad));
            if n <= 5 {
                let t = random_table(&mut rng, n);
                assert_eq!(t.par_ihn().unwrap(), naive_par_ihn(&t));
            }
        }
    }

    #[test]
    fn par_refuses_oversized_tables() {
        let t = TruthTable::constant_zero(11).unwrap();
        assert!(matches!(t.par_ihn(), Err(BooleanError::TooLarge { .. })));
    }

    #[test]
    fn par_ih_dominates_independence_power_but_can_exceed_it() {
        // Fixing all variables outside an independent set leaves a linear
        // function, whose full-magnitude peak gives 2^{alpha} — so the peak
        // never drops below that. It can be strictly larger: on K_{3,3} the
        // plain transform already peaks at |48 - 16| = 32, normalized power
        // 16, while the independence number is 3.
        let k33 = crate::graph::Graph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let t = TruthTable::from_graph(&k33).unwrap();
        assert_eq!(t.wht().iter().map(|w| w * w).max(), Some(1024));
        assert_eq!(t.par_ih().unwrap(), Dyadic::from_integer(16));
        assert_eq!(k33.independence_number().0, 3);

        let mut rng = SplitMix64::new(131);
        for n in 1..=8usize {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.next_u64() & 1 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = crate::graph::Graph::from_edges(n, &edges).unwrap();
            let t = TruthTable::from_graph(&g).unwrap();
            let (alpha, _) = g.independence_number();
            assert!(t.par_ih().unwrap() >= Dyadic::pow2(alpha as u32));
        }
    }
}

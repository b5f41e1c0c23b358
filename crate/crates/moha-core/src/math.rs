//! Scalar math shims and the statistical tests used by the automaton learner.
//!
//! `f64` transcendentals are `std`-only; route them through `libm` when the
//! crate is built without `std`.

#[cfg(feature = "std")]
mod shim {
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }
    #[inline]
    pub fn exp(x: f64) -> f64 {
        x.exp()
    }
    #[inline]
    pub fn ln(x: f64) -> f64 {
        x.ln()
    }
    #[inline]
    pub fn floor(x: f64) -> f64 {
        x.floor()
    }
    #[inline]
    pub fn round(x: f64) -> f64 {
        x.round()
    }
}

#[cfg(not(feature = "std"))]
mod shim {
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }
    #[inline]
    pub fn exp(x: f64) -> f64 {
        libm::exp(x)
    }
    #[inline]
    pub fn ln(x: f64) -> f64 {
        libm::log(x)
    }
    #[inline]
    pub fn floor(x: f64) -> f64 {
        libm::floor(x)
    }
    #[inline]
    pub fn round(x: f64) -> f64 {
        libm::round(x)
    }
}

pub use shim::{exp, floor, ln, round, sqrt};

/// ln Γ(x) for x > 0 (Lanczos approximation, ~15 significant digits).
pub fn ln_gamma(x: f64) -> f64 {
    const G: [f64; 6] = [
        76.18009172947146,
        -86.50532032941677,
        24.01409824083091,
        -1.231739572450155,
        0.1208650973866179e-2,
        -0.5395239384953e-5,
    ];
    let mut ser = 1.000000000190015;
    let mut den = x;
    for c in G {
        den += 1.0;
        ser += c / den;
    }
    let tmp = x + 5.5;
    let tmp = tmp - (x + 0.5) * ln(tmp);
    -tmp + ln(2.5066282746310005 * ser / x)
}

/// Regularized upper incomplete gamma Q(a, x) = Γ(a, x)/Γ(a), a > 0, x ≥ 0.
pub fn gamma_q(a: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    if x < a + 1.0 {
        // series for P(a, x), Q = 1 - P
        let mut ap = a;
        let mut sum = 1.0 / a;
        let mut del = sum;
        for _ in 0..500 {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if del.abs() < sum.abs() * 1e-15 {
                break;
            }
        }
        1.0 - sum * exp(-x + a * ln(x) - ln_gamma(a))
    } else {
        // continued fraction for Q(a, x)
        let mut b = x + 1.0 - a;
        let mut c = 1e308;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..500 {
            let an = -(i as f64) * (i as f64 - a);
            b += 2.0;
            d = an * d + b;
            if d.abs() < 1e-300 {
                d = 1e-300;
            }
            c = b + an / c;
            if c.abs() < 1e-300 {
                c = 1e-300;
            }
            d = 1.0 / d;
            let del = d * c;
            h *= del;
            if (del - 1.0).abs() < 1e-15 {
                break;
            }
        }
        exp(-x + a * ln(x) - ln_gamma(a)) * h
    }
}

/// p-value of a chi-squared statistic with `dof` degrees of freedom.
pub fn chi2_sf(stat: f64, dof: f64) -> f64 {
    if dof <= 0.0 {
        return 1.0;
    }
    gamma_q(dof / 2.0, stat / 2.0).clamp(0.0, 1.0)
}

/// Asymptotic survival function of the Kolmogorov distribution,
/// Q(λ) = 2 Σ_{j≥1} (-1)^{j-1} exp(-2 j² λ²).
pub fn kolmogorov_sf(lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for j in 1..=100 {
        let t = exp(-2.0 * (j as f64) * (j as f64) * lambda * lambda);
        sum += sign * t;
        if t < 1e-12 {
            break;
        }
        sign = -sign;
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Two-sample chi-squared homogeneity test over category counts.
///
/// Returns the p-value, or `None` when there are fewer than two categories
/// with any observations (the test carries no information).
pub fn chi2_two_sample(a: &[u64], b: &[u64]) -> Option<f64> {
    debug_assert_eq!(a.len(), b.len());
    let na: u64 = a.iter().sum();
    let nb: u64 = b.iter().sum();
    if na == 0 || nb == 0 {
        return None;
    }
    let n = (na + nb) as f64;
    let mut stat = 0.0;
    let mut cats = 0u32;
    for (&ca, &cb) in a.iter().zip(b) {
        let pooled = (ca + cb) as f64;
        if pooled == 0.0 {
            continue;
        }
        cats += 1;
        let ea = na as f64 * pooled / n;
        let eb = nb as f64 * pooled / n;
        stat += (ca as f64 - ea) * (ca as f64 - ea) / ea;
        stat += (cb as f64 - eb) * (cb as f64 - eb) / eb;
    }
    if cats < 2 {
        return None;
    }
    Some(chi2_sf(stat, (cats - 1) as f64))
}

/// Two-sample Kolmogorov–Smirnov test. Inputs need not be sorted.
///
/// Returns the p-value, or `None` when either sample is empty.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Option<f64> {
    if a.is_empty() || b.is_empty() {
        return None;
    }
    let mut sa: alloc::vec::Vec<f64> = a.to_vec();
    let mut sb: alloc::vec::Vec<f64> = b.to_vec();
    sa.sort_by(f64::total_cmp);
    sb.sort_by(f64::total_cmp);
    let (na, nb) = (sa.len(), sb.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < na && j < nb {
        let xa = sa[i];
        let xb = sb[j];
        let x = xa.min(xb);
        while i < na && sa[i] <= x {
            i += 1;
        }
        while j < nb && sb[j] <= x {
            j += 1;
        }
        let fa = i as f64 / na as f64;
        let fb = j as f64 / nb as f64;
        d = d.max((fa - fb).abs());
    }
    let ne = (na as f64 * nb as f64) / (na as f64 + nb as f64);
    let sq = sqrt(ne);
    Some(kolmogorov_sf((sq + 0.12 + 0.11 / sq) * d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_q_reference_values() {
        // Q(0.5, x) = erfc(sqrt(x)); Q(1, x) = exp(-x)
        assert!((gamma_q(1.0, 2.0) - exp(-2.0)).abs() < 1e-12);
        assert!((gamma_q(1.0, 0.5) - exp(-0.5)).abs() < 1e-12);
        // chi2 with 2 dof: sf(x) = exp(-x/2)
        assert!((chi2_sf(3.0, 2.0) - exp(-1.5)).abs() < 1e-12);
    }

    #[test]
    fn chi2_identical_counts_do_not_reject() {
        let p = chi2_two_sample(&[50, 30, 20], &[50, 30, 20]).unwrap();
        assert!(p > 0.99, "p = {p}");
    }

    #[test]
    fn chi2_disjoint_counts_reject() {
        let p = chi2_two_sample(&[100, 0], &[0, 100]).unwrap();
        assert!(p < 1e-6, "p = {p}");
    }

    #[test]
    fn ks_same_sample_passes_and_shifted_fails() {
        let a: alloc::vec::Vec<f64> = (0..200).map(|i| i as f64 / 200.0).collect();
        let b: alloc::vec::Vec<f64> = (0..200).map(|i| i as f64 / 200.0 + 5.0).collect();
        assert!(ks_two_sample(&a, &a).unwrap() > 0.99);
        assert!(ks_two_sample(&a, &b).unwrap() < 1e-9);
    }
}

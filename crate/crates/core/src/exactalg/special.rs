//! The special polynomials: Vandermonde products, Specht polynomials (also in
//! the power variables `y = x^m`), the eigenvectors `f_{α,i}`, and `δ_n`.

use super::{CycNum, Poly};
use crate::error::{Error, Result};
use crate::groups::{alpha_classes, orbit_length, t_alpha, GroupSpec};
use crate::partitions::SetPartition;

/// `Δ_S = Π_{r<s in S} (x_r − x_s)` in `n` variables; `S` is 1-based.
pub fn vandermonde(n: usize, s: &[u32]) -> Result<Poly> {
    let mut idx: Vec<u32> = s.to_vec();
    idx.sort_unstable();
    if idx.iter().any(|&i| i == 0 || i as usize > n) || idx.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Input(format!("{:?} is not a subset of 1..{}", s, n)));
    }
    let mut acc = Poly::one(n);
    for (a, &r) in idx.iter().enumerate() {
        for &t in &idx[a + 1..] {
            acc = acc.mul(&Poly::var(n, r as usize - 1).sub(&Poly::var(n, t as usize - 1)));
        }
    }
    Ok(acc)
}

/// `s_Q = Π_i Δ_{Q_i}`.
pub fn specht(q: &SetPartition) -> Poly {
    let n = q.n() as usize;
    q.blocks()
        .iter()
        .fold(Poly::one(n), |acc, b| acc.mul(&vandermonde(n, b).expect("valid block")))
}

/// `s_{P_α} = Π_i s_{P_i}(x^m)`: `parts[i]` partitions `{1..n_i}` and
/// `classes[i][k-1]` is the (0-based) coordinate that `k` stands for.
pub fn specht_power(n: usize, m: u32, parts: &[SetPartition], classes: &[Vec<usize>]) -> Result<Poly> {
    if parts.len() != classes.len() {
        return Err(Error::Input("one set partition per value class is required".into()));
    }
    let mut acc = Poly::one(n);
    for (p, cls) in parts.iter().zip(classes) {
        if p.n() as usize != cls.len() {
            return Err(Error::Input(format!("set partition of {} for a class of size {}", p.n(), cls.len())));
        }
        if cls.iter().any(|&j| j >= n) {
            return Err(Error::Input("class embedding out of range".into()));
        }
        for b in p.blocks() {
            let img: Vec<u32> = b.iter().map(|&k| cls[k as usize - 1] as u32 + 1).collect();
            acc = acc.mul(&vandermonde(n, &img)?.inflate(m));
        }
    }
    Ok(acc)
}

/// `f_{α,i} = Σ_{j<o_α} ζ_{o_α}^{-ij} t_α^j(x^α)`.
pub fn f_alpha(spec: &GroupSpec, alpha: &[u32], i: u32) -> Result<Poly> {
    alpha_classes(spec, alpha)?;
    let o = orbit_length(spec, alpha)?;
    if i >= o {
        return Err(Error::Input(format!("index {} out of range 0..{}", i, o)));
    }
    let n = spec.n as usize;
    let t = t_alpha(spec, alpha)?;
    let mut term = Poly::monomial(n, alpha);
    let mut acc = Poly::zero(n);
    for j in 0..o {
        let c = CycNum::zeta_pow(o, -((i * j) as i64));
        acc.add_scaled(&term, &c);
        term = t.act(&term);
    }
    Ok(acc)
}

/// `δ_n = (n−1)x_n − Σ_{i<n} x_i`.
pub fn delta_n(n: usize) -> Result<Poly> {
    if n < 2 {
        return Err(Error::Input("δ_n needs n ≥ 2".into()));
    }
    let mut p = Poly::var(n, n - 1).scale(&CycNum::int(n as i64 - 1));
    for i in 0..n - 1 {
        p = p.sub(&Poly::var(n, i));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_poly_n;

    #[test]
    fn vandermondes() {
        assert_eq!(vandermonde(3, &[3]).unwrap(), Poly::one(3));
        assert_eq!(vandermonde(2, &[1, 2]).unwrap().to_text(), "x1 - x2");
        assert_eq!(vandermonde(3, &[1, 2, 3]).unwrap().len(), 6);
        assert!(vandermonde(2, &[1, 3]).is_err());
    }

    #[test]
    fn specht_polys() {
        assert_eq!(specht(&SetPartition::singletons(4)), Poly::one(4));
        let q: SetPartition = "1,2|3,4".parse().unwrap();
        assert_eq!(specht(&q), parse_poly_n("(x1 - x2)*(x3 - x4)", 4).unwrap());
        assert_eq!(specht(&"1,2,3".parse().unwrap()).degree(), Some(3));
    }

    #[test]
    fn specht_in_powers() {
        let one: SetPartition = "1,2".parse().unwrap();
        let p = specht_power(2, 2, &[one.clone()], &[vec![0, 1]]).unwrap();
        assert_eq!(p.to_text(), "x1^2 - x2^2");
        let q = specht_power(4, 2, &[one.clone(), one], &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(q, parse_poly_n("(x1^2 - x2^2)*(x3^2 - x4^2)", 4).unwrap());
        let s: SetPartition = "1|2".parse().unwrap();
        assert_eq!(specht_power(2, 3, &[s], &[vec![0, 1]]).unwrap(), Poly::one(2));
    }

    #[test]
    fn f_vectors() {
        let g = GroupSpec::new(1, 2, 4).unwrap();
        let a = [1, 1, 0, 0];
        assert_eq!(f_alpha(&g, &a, 0).unwrap(), parse_poly_n("x1*x2 + x3*x4", 4).unwrap());
        assert_eq!(f_alpha(&g, &a, 1).unwrap(), parse_poly_n("x1*x2 - x3*x4", 4).unwrap());
        assert!(f_alpha(&g, &a, 2).is_err());
        let h = GroupSpec::new(1, 3, 3).unwrap();
        assert_eq!(
            f_alpha(&h, &[0, 1, 2], 0).unwrap(),
            parse_poly_n("x2*x3^2 + x1^2*x3 + x1*x2^2", 3).unwrap()
        );
        let s = GroupSpec::symmetric(3);
        assert_eq!(f_alpha(&s, &[0, 0, 0], 0).unwrap(), Poly::one(3));
    }

    #[test]
    fn deltas() {
        assert_eq!(delta_n(2).unwrap().to_text(), "-x1 + x2");
        assert_eq!(delta_n(3).unwrap(), parse_poly_n("2*x3 - x1 - x2", 3).unwrap());
        assert_eq!(delta_n(4).unwrap(), parse_poly_n("3*x4 - x1 - x2 - x3", 4).unwrap());
        assert!(delta_n(1).is_err());
    }
}

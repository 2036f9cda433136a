//! Closed logarithmic 1-forms `γ = Σ c_i dlog P_i + dψ` over a polynomial
//! ring: residues, the residue divisor with its point at infinity, the
//! étale-trivial classification, and partial-fraction extraction in one
//! variable.

use crate::error::{Error, Result};
use crate::exactalg::{parse_cyc, parse_poly, CycNum, Poly, Rat, UPoly};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct LogForm {
    vars: Vec<String>,
    log: Vec<(CycNum, Poly)>,
    psi_num: Poly,
    psi_den: Poly,
}

#[derive(Deserialize)]
struct FormFile {
    vars: Vec<String>,
    #[serde(default)]
    log: Vec<LogTerm>,
    #[serde(default)]
    exact: Option<String>,
    #[serde(default)]
    exact_den: Option<String>,
}

#[derive(Deserialize)]
struct LogTerm {
    c: Value,
    p: String,
}

fn univariate(p: &Poly) -> Result<UPoly> {
    p.to_upoly(0)
        .ok_or_else(|| Error::Unsupported("univariate polynomial with non-rational coefficients".into()))
}

impl LogForm {
    /// Normalizes every `P_i` to be monic and merges associates; in one variable
    /// each `P_i` is factored over `Q` first.
    pub fn new(vars: Vec<String>, log: Vec<(CycNum, Poly)>, psi_num: Poly, psi_den: Poly) -> Result<LogForm> {
        let n = vars.len();
        if n == 0 {
            return Err(Error::Input("at least one variable is required".into()));
        }
        if psi_den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if psi_num.nvars() != n || psi_den.nvars() != n {
            return Err(Error::SizeMismatch("exact part over a different variable set".into()));
        }
        let mut merged: Vec<(CycNum, Poly)> = Vec::new();
        for (c, p) in log {
            if p.nvars() != n {
                return Err(Error::SizeMismatch("log term over a different variable set".into()));
            }
            if p.is_constant() {
                return Err(Error::Input("log terms need nonconstant polynomials".into()));
            }
            let pieces = if n == 1 {
                let (_, fs) = univariate(&p)?.factor()?;
                fs.into_iter()
                    .map(|(q, e)| (c.scale(&Rat::int(e as i64)), Poly::from_upoly(&q, 1, 0)))
                    .collect()
            } else {
                vec![(c, p.monic()?)]
            };
            for (c, p) in pieces {
                match merged.iter_mut().find(|(_, q)| *q == p) {
                    Some((c0, _)) => *c0 = c0.add(&c),
                    None => merged.push((c, p)),
                }
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        merged.sort_by(|a, b| (a.1.degree(), a.1.to_text()).cmp(&(b.1.degree(), b.1.to_text())));
        Ok(LogForm { vars, log: merged, psi_num, psi_den })
    }

    /// `Σ k_j dlog f_j` (plus `dψ`) in one variable, factoring every `f_j` over `Q`.
    pub fn dlog_combination(var: &str, terms: &[(Rat, UPoly)], psi: Option<(UPoly, UPoly)>) -> Result<LogForm> {
        let mut log = Vec::new();
        for (k, f) in terms {
            let (_, fs) = f.factor()?;
            for (q, e) in fs {
                log.push((CycNum::rational(k * &Rat::int(e as i64)), Poly::from_upoly(&q, 1, 0)));
            }
        }
        let (pn, pd) = psi.unwrap_or((UPoly::zero(), UPoly::one()));
        LogForm::new(vec![var.to_string()], log, Poly::from_upoly(&pn, 1, 0), Poly::from_upoly(&pd, 1, 0))
    }

    /// Reads `{ "vars": [...], "log": [{"c": "1/2", "p": "x^2 - y"}], "exact": "x*y" }`.
    pub fn from_json(src: &str) -> Result<LogForm> {
        let f: FormFile = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
        let n = f.vars.len();
        let mut log = Vec::new();
        for t in f.log {
            let c = match &t.c {
                Value::String(s) => parse_cyc(s)?,
                Value::Number(x) => parse_cyc(&x.to_string())?,
                other => return Err(Error::Parse(format!("bad coefficient {}", other))),
            };
            log.push((c, parse_poly(&t.p, &f.vars)?));
        }
        let num = match &f.exact {
            Some(s) => parse_poly(s, &f.vars)?,
            None => Poly::zero(n),
        };
        let den = match &f.exact_den {
            Some(s) => parse_poly(s, &f.vars)?,
            None => Poly::one(n),
        };
        LogForm::new(f.vars, log, num, den)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn log_part(&self) -> &[(CycNum, Poly)] {
        &self.log
    }

    pub fn exact_part(&self) -> (&Poly, &Poly) {
        (&self.psi_num, &self.psi_den)
    }

    pub fn psi_is_constant(&self) -> bool {
        proportional(&self.psi_num, &self.psi_den)
    }

    /// `γ + γ'`.
    pub fn add(&self, o: &LogForm) -> Result<LogForm> {
        if self.vars != o.vars {
            return Err(Error::Input("forms over different variables".into()));
        }
        let mut log = self.log.clone();
        log.extend(o.log.iter().cloned());
        let num = self.psi_num.mul(&o.psi_den).add(&o.psi_num.mul(&self.psi_den));
        LogForm::new(self.vars.clone(), log, num, self.psi_den.mul(&o.psi_den))
    }

    fn poly_text(&self, p: &Poly) -> String {
        p.to_string_with(&self.vars)
    }
}

impl fmt::Display for LogForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .log
            .iter()
            .map(|(c, p)| format!("{}*dlog({})", c, self.poly_text(p)))
            .collect();
        if !self.psi_num.is_zero() {
            parts.push(format!("d(({})/({}))", self.poly_text(&self.psi_num), self.poly_text(&self.psi_den)));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `a` is a scalar multiple of `b` (`b ≠ 0`).
fn proportional(a: &Poly, b: &Poly) -> bool {
    match (a.leading(), b.leading()) {
        (None, _) => true,
        (Some((ma, ca)), Some((mb, cb))) => ma == mb && a.scale(cb) == b.scale(ca),
        _ => false,
    }
}

/// Residue of `γ` along the prime `P`.
pub fn residue_along(form: &LogForm, p: &Poly) -> Result<CycNum> {
    if p.nvars() != form.vars.len() {
        return Err(Error::SizeMismatch("prime over a different variable set".into()));
    }
    if p.is_constant() {
        return Err(Error::Input("residues are taken along nonconstant primes".into()));
    }
    if form.vars.len() == 1 && !univariate(p)?.is_irreducible()? {
        return Err(Error::Input(format!("{} is reducible", form.poly_text(p))));
    }
    let q = p.monic()?;
    Ok(form.log.iter().find(|(_, pi)| *pi == q).map_or(CycNum::zero(), |(c, _)| c.clone()))
}

#[derive(Clone, Debug, PartialEq)]
pub enum Place {
    Prime(Poly),
    Infinity,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidueDivisor {
    pub vars: Vec<String>,
    pub entries: Vec<(CycNum, Place)>,
}

impl ResidueDivisor {
    /// `Σ c · deg(place)`, with `deg ∞ = 1`.
    pub fn degree_weighted_sum(&self) -> CycNum {
        self.entries.iter().fold(CycNum::zero(), |acc, (c, pl)| {
            let d = match pl {
                Place::Prime(p) => p.degree().unwrap_or(0) as i64,
                Place::Infinity => 1,
            };
            acc.add(&c.scale(&Rat::int(d)))
        })
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(c, pl)| {
                let place = match pl {
                    Place::Prime(p) => p.to_string_with(&self.vars),
                    Place::Infinity => "inf".to_string(),
                };
                json!({"c": c.to_string(), "place": place})
            })
            .collect();
        json!({"entries": entries, "degree_sum": self.degree_weighted_sum().to_string()})
    }
}

/// The divisor `Σ c_i [P_i]`, completed in one variable by the point at infinity.
pub fn residue_divisor(form: &LogForm) -> ResidueDivisor {
    let mut entries: Vec<(CycNum, Place)> = form.log.iter().map(|(c, p)| (c.clone(), Place::Prime(p.clone()))).collect();
    if form.vars.len() == 1 {
        let inf = form.log.iter().fold(CycNum::zero(), |acc, (c, p)| {
            acc.sub(&c.scale(&Rat::int(p.degree().unwrap_or(0) as i64)))
        });
        if !inf.is_zero() {
            entries.push((inf, Place::Infinity));
        }
    }
    ResidueDivisor { vars: form.vars.clone(), entries }
}

/// `(l, φ)` with `φ = Π P_i^{l c_i}` as a fraction.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub l: u64,
    pub phi_num: Poly,
    pub phi_den: Poly,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    EtaleTrivial(Certificate),
    NotEtaleTrivial { reason: String, witness: Option<Certificate> },
}

#[derive(Serialize)]
struct VerdictJson {
    etale_trivial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    phi: Option<String>,
}

impl Verdict {
    pub fn is_etale_trivial(&self) -> bool {
        matches!(self, Verdict::EtaleTrivial(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::EtaleTrivial(c) => Some(c),
            Verdict::NotEtaleTrivial { witness, .. } => witness.as_ref(),
        }
    }

    pub fn to_json(&self, vars: &[String]) -> Value {
        let cert = self.certificate();
        let phi = cert.map(|c| {
            let num = c.phi_num.to_string_with(vars);
            if c.phi_den.is_constant() {
                num
            } else {
                format!("({})/({})", num, c.phi_den.to_string_with(vars))
            }
        });
        let reason = match self {
            Verdict::EtaleTrivial(_) => None,
            Verdict::NotEtaleTrivial { reason, .. } => Some(reason.clone()),
        };
        serde_json::to_value(VerdictJson {
            etale_trivial: self.is_etale_trivial(),
            reason,
            l: cert.map(|c| c.l),
            phi,
        })
        .expect("plain data")
    }
}

/// Decides whether `lγ ∈ dlog K` for some `l ≥ 1`.
pub fn classify_etale_trivial(form: &LogForm) -> Result<Verdict> {
    let mut rats = Vec::with_capacity(form.log.len());
    for (c, _) in &form.log {
        match c.to_rat() {
            Some(r) => rats.push(r),
            None => return Ok(Verdict::NotEtaleTrivial { reason: "irrational residue".into(), witness: None }),
        }
    }
    let l = rats.iter().fold(num_bigint::BigInt::one(), |acc, r| acc.lcm(&r.denom()));
    let l64 = l.to_u64().ok_or_else(|| Error::Bound("denominator lcm too large".into()))?;
    let n = form.vars.len();
    let mut num = Poly::one(n);
    let mut den = Poly::one(n);
    for (r, (_, p)) in rats.iter().zip(&form.log) {
        let e = (r * &Rat::int(l64 as i64)).to_i64().ok_or_else(|| Error::Bound("exponent too large".into()))?;
        let e32 = u32::try_from(e.unsigned_abs()).map_err(|_| Error::Bound("exponent too large".into()))?;
        if e > 0 {
            num = num.mul(&p.pow(e32));
        } else {
            den = den.mul(&p.pow(e32));
        }
    }
    let cert = Certificate { l: l64, phi_num: num, phi_den: den };
    if form.psi_is_constant() {
        Ok(Verdict::EtaleTrivial(cert))
    } else {
        Ok(Verdict::NotEtaleTrivial { reason: "exponential component".into(), witness: Some(cert) })
    }
}

/// Checks `lγ − dlog φ = l·dψ` as an identity of rational 1-forms, i.e.
/// `l Σ c_i dP_i/P_i = dφ/φ` after clearing denominators.
pub fn certificate_holds(form: &LogForm, cert: &Certificate) -> bool {
    let n = form.vars.len();
    let l = CycNum::int(cert.l as i64);
    let prod = form.log.iter().fold(Poly::one(n), |acc, (_, p)| acc.mul(p));
    let nd = cert.phi_num.mul(&cert.phi_den);
    (0..n).all(|v| {
        let mut lhs = Poly::zero(n);
        for (i, (c, p)) in form.log.iter().enumerate() {
            let others = form
                .log
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(Poly::one(n), |acc, (_, (_, q))| acc.mul(q));
            lhs.add_scaled(&p.derivative(v).mul(&others), &c.mul(&l));
        }
        let dphi = cert.phi_num.derivative(v).mul(&cert.phi_den).sub(&cert.phi_num.mul(&cert.phi_den.derivative(v)));
        lhs.mul(&nd) == dphi.mul(&prod)
    })
}

/// Integer residue differences along every prime and a constant exact difference.
pub fn iso_class_equal(a: &LogForm, b: &LogForm) -> bool {
    if a.vars != b.vars {
        return false;
    }
    let coeff = |f: &LogForm, p: &Poly| f.log.iter().find(|(_, q)| q == p).map_or(CycNum::zero(), |(c, _)| c.clone());
    let logs_ok = a
        .log
        .iter()
        .chain(&b.log)
        .all(|(_, p)| coeff(a, p).sub(&coeff(b, p)).to_integer().is_some());
    let diff = a.psi_num.mul(&b.psi_den).sub(&b.psi_num.mul(&a.psi_den));
    logs_ok && proportional(&diff, &a.psi_den.mul(&b.psi_den))
}

/// Result of partial-fraction extraction.
#[derive(Clone, Debug)]
pub struct Extraction {
    pub form: LogForm,
    /// Primes whose residue function `r` is not constant, with `r`.
    pub nonconstant: Vec<(UPoly, UPoly)>,
}

/// Splits `f dx` (`f = num/den`, `den` squarefree) into log terms along the
/// factors of `den` where the residue `A·(B q')^{-1} mod q` is constant, and
/// `dψ` for the polynomial part.
pub fn extract_log_part_univariate(var: &str, num: &UPoly, den: &UPoly) -> Result<Extraction> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !den.is_squarefree() {
        return Err(Error::Input("denominator is not squarefree".into()));
    }
    let (quot, _) = num.divrem(den);
    let psi = UPoly::new(
        std::iter::once(Rat::zero())
            .chain(quot.coeffs().iter().enumerate().map(|(k, c)| c * &Rat::new(1, k as i64 + 1)))
            .collect(),
    );
    let (_, factors) = den.factor()?;
    let mut log = Vec::new();
    let mut nonconstant = Vec::new();
    for (q, _) in factors {
        let b = den.div_exact(&q).expect("factor divides");
        let inv = b
            .mul(&q.derivative())
            .inv_mod(&q)
            .ok_or_else(|| Error::Input("denominator is not squarefree".into()))?;
        let r = num.mul(&inv).rem(&q);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            log.push((CycNum::rational(r.coeff(0)), Poly::from_upoly(&q, 1, 0)));
        } else {
            nonconstant.push((q, r));
        }
    }
    let form = LogForm::new(vec![var.to_string()], log, Poly::from_upoly(&psi, 1, 0), Poly::one(1))?;
    Ok(Extraction { form, nonconstant })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    fn x() -> Vec<String> {
        vec!["x".to_string()]
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &x()).unwrap()
    }

    #[test]
    fn residues_along_primes() {
        let g = LogForm::dlog_combination("x", &[(Rat::int(1), u(&[-1, 1]))], None).unwrap();
        assert_eq!(residue_along(&g, &p("x - 1")).unwrap(), CycNum::one());
        assert_eq!(residue_along(&g, &p("2*x - 2")).unwrap(), CycNum::one());
        let g = LogForm::dlog_combination("x", &[(Rat::int(2), u(&[-1, 1])), (Rat::int(-1), u(&[1, 1]))], None).unwrap();
        assert_eq!(residue_along(&g, &p("x + 1")).unwrap(), CycNum::int(-1));
        assert!(residue_along(&g, &p("x^2 - 1")).is_err());
        let exact = LogForm::new(x(), vec![], p("x^3"), p("x + 2")).unwrap();
        assert!(residue_along(&exact, &p("x + 2")).unwrap().is_zero());
    }

    #[test]
    fn divisors() {
        let g = LogForm::dlog_combination("x", &[(Rat::int(1), u(&[-1, 1])), (Rat::int(-1), u(&[1, 1]))], None).unwrap();
        let d = residue_divisor(&g);
        assert_eq!(d.entries.len(), 2);
        assert!(d.degree_weighted_sum().is_zero());
        let g = LogForm::dlog_combination("x", &[(Rat::int(1), u(&[1, 0, 1]))], None).unwrap();
        let d = residue_divisor(&g);
        assert_eq!(d.entries.last().unwrap(), &(CycNum::int(-2), Place::Infinity));
        assert!(d.degree_weighted_sum().is_zero());
    }

    #[test]
    fn classification() {
        let g = LogForm::new(x(), vec![(CycNum::rational(Rat::new(1, 2)), p("x^2 - 2"))], Poly::zero(1), Poly::one(1)).unwrap();
        match classify_etale_trivial(&g).unwrap() {
            Verdict::EtaleTrivial(c) => {
                assert_eq!(c.l, 2);
                assert_eq!(c.phi_num, p("x^2 - 2"));
                assert!(certificate_holds(&g, &c));
            }
            v => panic!("{:?}", v),
        }
        let g = LogForm::new(x(), vec![(CycNum::one(), p("x"))], p("x"), Poly::one(1)).unwrap();
        match classify_etale_trivial(&g).unwrap() {
            Verdict::NotEtaleTrivial { reason, witness } => {
                assert_eq!(reason, "exponential component");
                assert!(certificate_holds(&g, &witness.unwrap()));
            }
            v => panic!("{:?}", v),
        }
        let g = LogForm::new(x(), vec![(CycNum::zeta(3), p("x"))], Poly::zero(1), Poly::one(1)).unwrap();
        assert_eq!(
            classify_etale_trivial(&g).unwrap(),
            Verdict::NotEtaleTrivial { reason: "irrational residue".into(), witness: None }
        );
    }

    #[test]
    fn iso_classes() {
        let half = LogForm::new(x(), vec![(CycNum::rational(Rat::new(1, 2)), p("x"))], Poly::zero(1), Poly::one(1)).unwrap();
        let third = LogForm::new(x(), vec![(CycNum::rational(Rat::new(1, 3)), p("x"))], Poly::zero(1), Poly::one(1)).unwrap();
        let shift = LogForm::new(x(), vec![(CycNum::one(), p("x + 5"))], Poly::zero(1), Poly::one(1)).unwrap();
        let exact = LogForm::new(x(), vec![], p("x"), Poly::one(1)).unwrap();
        let konst = LogForm::new(x(), vec![], p("7"), Poly::one(1)).unwrap();
        assert!(iso_class_equal(&half, &half.add(&shift).unwrap()));
        assert!(!iso_class_equal(&half, &third));
        assert!(!iso_class_equal(&half, &half.add(&exact).unwrap()));
        assert!(iso_class_equal(&half, &half.add(&konst).unwrap()));
    }

    #[test]
    fn extraction() {
        let e = extract_log_part_univariate("x", &u(&[1]), &u(&[-1, 0, 1])).unwrap();
        assert!(e.nonconstant.is_empty());
        assert_eq!(residue_along(&e.form, &p("x - 1")).unwrap(), CycNum::rational(Rat::new(1, 2)));
        assert_eq!(residue_along(&e.form, &p("x + 1")).unwrap(), CycNum::rational(Rat::new(-1, 2)));
        let e = extract_log_part_univariate("x", &u(&[0, 2]), &u(&[1, 0, 1])).unwrap();
        assert_eq!(e.form.log_part(), &[(CycNum::one(), p("x^2 + 1"))]);
        let e = extract_log_part_univariate("x", &u(&[1, 1]), &u(&[1, 0, 1])).unwrap();
        assert_eq!(e.nonconstant.len(), 1);
        assert!(e.form.log_part().is_empty());
        // residue (x+1)/(2x) mod x^2+1 = (1 - x)/2
        assert_eq!(e.nonconstant[0].1, UPoly::new(vec![Rat::new(1, 2), Rat::new(-1, 2)]));
        assert!(extract_log_part_univariate("x", &u(&[1]), &u(&[0, 0, 1])).is_err());
    }

    #[test]
    fn json_forms() {
        let f = LogForm::from_json(r#"{"vars":["x"],"log":[{"c":"1/2","p":"x^2 - 1"}]}"#).unwrap();
        assert_eq!(f.log_part().len(), 2);
        let c = classify_etale_trivial(&f).unwrap();
        assert_eq!(c.to_json(f.vars())["phi"], "x^2 - 1");
        let f = LogForm::from_json(r#"{"vars":["x","y"],"log":[{"c":"1/2","p":"x^2 - y"}],"exact":"x*y"}"#).unwrap();
        assert!(!f.psi_is_constant());
        let f = LogForm::from_json(r#"{"vars":["x"],"log":[{"c":"zeta3","p":"x"}]}"#).unwrap();
        assert!(!f.log_part()[0].0.is_rational());
        assert!(LogForm::from_json("{").is_err());
    }
}

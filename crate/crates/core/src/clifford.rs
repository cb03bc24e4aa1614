//! Symmetric Clifford systems with exact integer matrices.
//!
//! A symmetric Clifford system is a family `P_0, ..., P_m` of symmetric
//! orthogonal matrices on R^{2l} with `P_a P_b + P_b P_a = 2 delta_ab Id`.
//! Every construction used here (complex/quaternion/octonion left
//! multiplications, the 16-dimensional recipe behind the (9, 6) family, and
//! periodicity lifts for m >= 10) produces signed permutation matrices, so
//! the systems are stored with exact `i64` entries and all structural checks
//! (anticommutation, the trace invariant q) are exact.
//!
//! The block form is
//! `P_0(u, v) = (u, -v)`, `P_1(u, v) = (v, u)`,
//! `P_{1+a}(u, v) = (E_a v, -E_a u)`,
//! where `E_1, ..., E_{m-1}` are orthogonal skew matrices on R^l with
//! `E_a E_b + E_b E_a = -2 delta_ab Id`, and `l = k * delta(m)` for `k`
//! irreducible summands. For m = 0 (mod 4) the sign pattern of the summands
//! sets the invariant q with `2 q delta(m) = Tr(P_0 P_1 ... P_m)`; the
//! irreducible generators are oriented so that q equals the sum of the
//! summand signs.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Mat;
use crate::octonion::{basis_product_table, Quaternion};
use crate::scalar::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliffordError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not a valid family: m2 = k*delta(m) - m - 1 = {m2} must be at least 1")]
    InvalidFamily { m2: i64 },
    #[error("mixed sign patterns are only meaningful when m = 0 (mod 4)")]
    InvalidVariant,
    #[error("generator index {0} out of range")]
    InvalidIndex(usize),
    #[error("dropping this generator leaves a degenerate family")]
    DegenerateFamily,
    #[error("trace of P_0...P_m is not an integer multiple of 2*delta(m)")]
    InternalInconsistency,
}

/// Dimension delta(m) of the irreducible module, mod-8 periodic.
pub fn delta_of_m(m: usize) -> Result<usize, CliffordError> {
    if m < 1 {
        return Err(CliffordError::InvalidArgument(format!("m must be >= 1, got {m}")));
    }
    const TABLE: [usize; 8] = [1, 2, 4, 4, 8, 8, 8, 8];
    let mut factor = 1usize;
    let mut mm = m;
    while mm > 8 {
        mm -= 8;
        factor *= 16;
    }
    Ok(TABLE[mm - 1] * factor)
}

/// Dense square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IMat {
    pub n: usize,
    pub a: Vec<i64>,
}

impl IMat {
    pub fn zeros(n: usize) -> Self {
        IMat { n, a: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.a[i * n + i] = 1;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = IMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let v = self.get(i, k);
                if v == 0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] += v * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IMat) -> IMat {
        assert_eq!(self.n, other.n);
        IMat { n: self.n, a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect() }
    }

    pub fn neg(&self) -> IMat {
        IMat { n: self.n, a: self.a.iter().map(|x| -x).collect() }
    }

    pub fn transpose(&self) -> IMat {
        let n = self.n;
        let mut out = IMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn max_abs(&self) -> i64 {
        self.a.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    pub fn kron(&self, other: &IMat) -> IMat {
        let p = self.n;
        let q = other.n;
        let mut out = IMat::zeros(p * q);
        for i1 in 0..p {
            for j1 in 0..p {
                let v = self.get(i1, j1);
                if v == 0 {
                    continue;
                }
                for i2 in 0..q {
                    for j2 in 0..q {
                        out.set(i1 * q + i2, j1 * q + j2, v * other.get(i2, j2));
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum of `copies` scaled copies of `self`.
    pub fn block_diag_copies(&self, scales: &[i64]) -> IMat {
        let d = self.n;
        let mut out = IMat::zeros(d * scales.len());
        for (b, &s) in scales.iter().enumerate() {
            for i in 0..d {
                for j in 0..d {
                    out.set(b * d + i, b * d + j, s * self.get(i, j));
                }
            }
        }
        out
    }

    pub fn to_real<S: Scalar>(&self) -> Mat<S> {
        Mat {
            rows: self.n,
            cols: self.n,
            data: self.a.iter().map(|&v| S::of(v as f64)).collect(),
        }
    }

    /// Apply to an integer vector.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(self.n, x.len());
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum()).collect()
    }
}

/// Signed permutation matrix sending e_j to sign[j] * e_{perm[j]}.
pub fn signed_permutation(perm: &[usize], signs: &[i64]) -> IMat {
    let n = perm.len();
    assert_eq!(signs.len(), n);
    let mut m = IMat::zeros(n);
    for j in 0..n {
        assert!(signs[j] == 1 || signs[j] == -1);
        m.set(perm[j], j, signs[j]);
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Sign pattern realizing a target q with k summands: (k+q)/2 plus signs.
pub fn signs_for_q(k: usize, q: i64) -> Result<Vec<Sign>, CliffordError> {
    let k_i = k as i64;
    if q.abs() > k_i || (q - k_i) % 2 != 0 {
        return Err(CliffordError::InvalidArgument(format!(
            "q={q} is not realizable with k={k} summands (need |q| <= k, q = k mod 2)"
        )));
    }
    let plus = ((k_i + q) / 2) as usize;
    Ok((0..k).map(|i| if i < plus { Sign::Plus } else { Sign::Minus }).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemVariant {
    Standard,
    /// The octonion construction of the definite (8, 7) family on R^32.
    Octonion87Definite,
    /// The octonion construction of the (9, 6) family on R^32.
    Octonion96,
}

/// The skew generator set E_1..E_{m-1} on R^l.
#[derive(Clone, Debug)]
pub struct SkewGeneratorSet {
    pub m: usize,
    pub l: usize,
    pub gens: Vec<IMat>,
}

#[derive(Clone, Debug)]
pub struct CliffordSystem {
    pub m: usize,
    pub k: usize,
    pub l: usize,
    pub delta: usize,
    /// The m+1 symmetric matrices on R^{2l}, exact integer entries.
    pub p: Vec<IMat>,
    /// Per-summand orientation pattern; None for systems derived by dropping
    /// a generator or conjugating (no canonical block form).
    pub signs: Option<Vec<Sign>>,
    /// Trace invariant, 2 q delta(m) = Tr(P_0 ... P_m).
    pub q: i64,
    /// The E_a on R^l when the system is in block form.
    pub generators: Option<SkewGeneratorSet>,
}

impl CliffordSystem {
    pub fn m1(&self) -> usize {
        self.m
    }

    pub fn m2(&self) -> usize {
        self.l - self.m - 1
    }

    pub fn ambient_dim(&self) -> usize {
        2 * self.l
    }

    pub fn is_definite(&self) -> bool {
        self.m % 4 == 0 && self.q.unsigned_abs() as usize == self.k
    }

    /// Congruent system P'_a = C^T P_a C for orthogonal integer C.
    pub fn conjugated(&self, c: &IMat) -> CliffordSystem {
        assert_eq!(c.n, self.ambient_dim());
        let ct = c.transpose();
        assert_eq!(ct.mul(c), IMat::identity(c.n), "conjugation needs an orthogonal matrix");
        let p: Vec<IMat> = self.p.iter().map(|pa| ct.mul(pa).mul(c)).collect();
        let q = trace_invariant_of(&p, self.m, self.delta).expect("conjugation preserves q");
        CliffordSystem { p, signs: None, q, generators: None, ..*self }
    }
}

fn quaternion_basis(idx: usize) -> Quaternion<i64> {
    let mut q = Quaternion::zero();
    q.0[idx] = 1;
    q
}

/// 4x4 matrix of left multiplication by the quaternion unit `idx` (1=i, 2=j, 3=k).
fn quaternion_left_mult(idx: usize) -> IMat {
    let u = quaternion_basis(idx);
    let mut m = IMat::zeros(4);
    for j in 0..4 {
        let col = u.mul(quaternion_basis(j));
        for i in 0..4 {
            m.set(i, j, col.0[i]);
        }
    }
    m
}

/// 8x8 matrix of left multiplication by the octonion unit e_idx.
fn octonion_left_mult(idx: usize) -> IMat {
    let table = basis_product_table();
    let mut m = IMat::zeros(8);
    for j in 0..8 {
        let (row, sign) = table[idx][j];
        m.set(row, j, sign);
    }
    m
}

/// The eight anticommuting skew generators on R^16 = O + O behind the (9, 6)
/// construction: E_a(u1, u2) = (e_a u1, -e_a u2) for a = 1..7 and
/// E_8(u1, u2) = (u2, -u1).
fn generators_dim16() -> Vec<IMat> {
    let mut gens = Vec::with_capacity(8);
    for alpha in 1..8 {
        let la = octonion_left_mult(alpha);
        let mut e = IMat::zeros(16);
        for i in 0..8 {
            for j in 0..8 {
                e.set(i, j, la.get(i, j));
                e.set(8 + i, 8 + j, -la.get(i, j));
            }
        }
        gens.push(e);
    }
    let mut j16 = IMat::zeros(16);
    for i in 0..8 {
        j16.set(i, 8 + i, 1);
        j16.set(8 + i, i, -1);
    }
    gens.push(j16);
    gens
}

/// Periodicity lift: generators for m from those for m-8, tensoring with the
/// sixteen-dimensional module. R = S_1...S_8 is symmetric, squares to the
/// identity and anticommutes with every S_j.
fn periodicity_lift(prev: &[IMat], prev_dim: usize) -> Vec<IMat> {
    let s = generators_dim16();
    let mut r = IMat::identity(16);
    for sj in &s {
        r = r.mul(sj);
    }
    debug_assert!(r.is_symmetric());
    debug_assert_eq!(r.mul(&r), IMat::identity(16));
    let id_prev = IMat::identity(prev_dim);
    let mut out: Vec<IMat> = prev.iter().map(|e| e.kron(&r)).collect();
    out.extend(s.iter().map(|sj| id_prev.kron(sj)));
    out
}

/// The m-1 irreducible skew generators on R^{delta(m)}, oriented so that for
/// m = 0 (mod 4) the ordered product E_1...E_{m-1} is +Id.
pub fn irreducible_generators(m: usize) -> Result<Vec<IMat>, CliffordError> {
    let delta = delta_of_m(m)?;
    let mut gens: Vec<IMat> = match m {
        1 => vec![],
        2 => {
            let mut j = IMat::zeros(2);
            j.set(0, 1, -1);
            j.set(1, 0, 1);
            vec![j]
        }
        3 | 4 => (1..m).map(quaternion_left_mult).collect(),
        5..=8 => (1..m).map(octonion_left_mult).collect(),
        9 => generators_dim16(),
        _ => {
            let prev = irreducible_generators(m - 8)?;
            periodicity_lift(&prev, delta_of_m(m - 8)?)
        }
    };
    if m % 4 == 0 {
        let mut g = IMat::identity(delta);
        for e in &gens {
            g = g.mul(e);
        }
        if g == IMat::identity(delta).neg() {
            let last = gens.last_mut().expect("m = 0 mod 4 has generators");
            *last = last.neg();
        } else {
            assert_eq!(g, IMat::identity(delta), "volume element must be +-Id");
        }
    }
    Ok(gens)
}

fn assemble_block_form(l: usize, gens: &[IMat]) -> Vec<IMat> {
    let n = 2 * l;
    let mut p0 = IMat::zeros(n);
    let mut p1 = IMat::zeros(n);
    for i in 0..l {
        p0.set(i, i, 1);
        p0.set(l + i, l + i, -1);
        p1.set(i, l + i, 1);
        p1.set(l + i, i, 1);
    }
    let mut p = vec![p0, p1];
    for e in gens {
        let mut pa = IMat::zeros(n);
        for i in 0..l {
            for j in 0..l {
                let v = e.get(i, j);
                if v != 0 {
                    pa.set(i, l + j, v);
                    pa.set(l + i, j, -v);
                }
            }
        }
        p.push(pa);
    }
    p
}

fn trace_invariant_of(p: &[IMat], m: usize, delta: usize) -> Result<i64, CliffordError> {
    let n = p[0].n;
    let mut prod = IMat::identity(n);
    for pa in p {
        prod = prod.mul(pa);
    }
    let t = prod.trace();
    let denom = 2 * delta as i64;
    if t % denom != 0 {
        return Err(CliffordError::InternalInconsistency);
    }
    let q = t / denom;
    if m % 4 != 0 && q != 0 {
        return Err(CliffordError::InternalInconsistency);
    }
    Ok(q)
}

/// Build a symmetric Clifford system in block form.
pub fn build_system(
    m: usize,
    k: usize,
    signs: &[Sign],
    variant: SystemVariant,
) -> Result<CliffordSystem, CliffordError> {
    match variant {
        SystemVariant::Standard => {}
        SystemVariant::Octonion87Definite => {
            if m != 8 || k != 2 || signs.iter().any(|s| *s != Sign::Plus) {
                return Err(CliffordError::InvalidArgument(
                    "the definite octonion variant is m=8, k=2, all-plus signs".into(),
                ));
            }
        }
        SystemVariant::Octonion96 => {
            if m != 9 || k != 1 {
                return Err(CliffordError::InvalidArgument(
                    "the octonion (9,6) variant is m=9, k=1".into(),
                ));
            }
        }
    }
    if k < 1 {
        return Err(CliffordError::InvalidArgument("k must be >= 1".into()));
    }
    if signs.len() != k {
        return Err(CliffordError::InvalidArgument(format!(
            "sign pattern length {} does not match k={k}",
            signs.len()
        )));
    }
    let delta = delta_of_m(m)?;
    let l = k * delta;
    let m2 = l as i64 - m as i64 - 1;
    if m2 < 1 {
        return Err(CliffordError::InvalidFamily { m2 });
    }
    if m % 4 != 0 && signs.iter().any(|s| *s != signs[0]) {
        return Err(CliffordError::InvalidVariant);
    }
    let irr = irreducible_generators(m)?;
    let scales: Vec<i64> = signs.iter().map(|s| s.value()).collect();
    let gens: Vec<IMat> = irr.iter().map(|e| e.block_diag_copies(&scales)).collect();
    let p = assemble_block_form(l, &gens);
    let q = trace_invariant_of(&p, m, delta)?;
    Ok(CliffordSystem {
        m,
        k,
        l,
        delta,
        p,
        signs: Some(signs.to_vec()),
        q,
        generators: Some(SkewGeneratorSet { m, l, gens }),
    })
}

/// Convenience: build with the sign pattern realizing q (all-plus when q is None).
pub fn build_family(m: usize, k: usize, q: Option<i64>) -> Result<CliffordSystem, CliffordError> {
    let signs = match q {
        Some(q) => {
            if m % 4 != 0 {
                return Err(CliffordError::InvalidArgument(
                    "q may only be specified when m = 0 (mod 4)".into(),
                ));
            }
            signs_for_q(k, q)?
        }
        None => vec![Sign::Plus; k],
    };
    build_system(m, k, &signs, SystemVariant::Standard)
}

/// Remove one generator, producing the (m-1)-system on the same ambient space.
pub fn drop_generator(sys: &CliffordSystem, index: usize) -> Result<CliffordSystem, CliffordError> {
    if index > sys.m {
        return Err(CliffordError::InvalidIndex(index));
    }
    let m_new = sys.m - 1;
    if m_new < 1 {
        return Err(CliffordError::DegenerateFamily);
    }
    let delta_new = delta_of_m(m_new)?;
    if sys.l % delta_new != 0 {
        return Err(CliffordError::DegenerateFamily);
    }
    let m2_new = sys.l as i64 - m_new as i64 - 1;
    if m2_new < 1 {
        return Err(CliffordError::DegenerateFamily);
    }
    let p: Vec<IMat> =
        sys.p.iter().enumerate().filter(|(i, _)| *i != index).map(|(_, pa)| pa.clone()).collect();
    let q = trace_invariant_of(&p, m_new, delta_new)?;
    Ok(CliffordSystem {
        m: m_new,
        k: sys.l / delta_new,
        l: sys.l,
        delta: delta_new,
        p,
        signs: None,
        q,
        generators: None,
    })
}

/// Recompute the trace invariant from the stored matrices.
pub fn trace_invariant(sys: &CliffordSystem) -> Result<i64, CliffordError> {
    trace_invariant_of(&sys.p, sys.m, sys.delta)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationReport {
    pub pass: bool,
    pub max_deviation: f64,
    /// First pair (alpha, beta) violating the anticommutation relation.
    pub violating_pair: Option<(usize, usize)>,
    pub symmetry_deviation: f64,
}

/// Exact check of symmetry and P_a P_b + P_b P_a = 2 delta_ab Id.
pub fn verify_clifford_relations(sys: &CliffordSystem) -> RelationReport {
    let n = sys.p[0].n;
    let id2 = {
        let mut m = IMat::zeros(n);
        for i in 0..n {
            m.set(i, i, 2);
        }
        m
    };
    let mut max_dev = 0i64;
    let mut sym_dev = 0i64;
    let mut pair = None;
    for pa in &sys.p {
        let d = pa.add(&pa.transpose().neg()).max_abs();
        sym_dev = sym_dev.max(d);
    }
    for a in 0..sys.p.len() {
        for b in a..sys.p.len() {
            let mut anti = sys.p[a].mul(&sys.p[b]).add(&sys.p[b].mul(&sys.p[a]));
            if a == b {
                anti = anti.add(&id2.neg());
            }
            let dev = anti.max_abs();
            if dev > max_dev {
                max_dev = dev;
                if pair.is_none() {
                    pair = Some((a, b));
                }
            }
        }
    }
    RelationReport {
        pass: max_dev == 0 && sym_dev == 0,
        max_deviation: max_dev as f64,
        violating_pair: if max_dev > 0 { pair } else { None },
        symmetry_deviation: sym_dev as f64,
    }
}

/// Relation check over real matrices (for perturbed or external systems).
pub fn verify_clifford_relations_real<S: Scalar>(mats: &[Mat<S>], tol: f64) -> RelationReport {
    let n = mats[0].rows;
    let mut max_dev = S::zero();
    let mut sym_dev = S::zero();
    let mut pair = None;
    for ma in mats {
        sym_dev = sym_dev.max(ma.symmetry_deviation());
    }
    for a in 0..mats.len() {
        for b in a..mats.len() {
            let mut anti = mats[a].matmul(&mats[b]).add(&mats[b].matmul(&mats[a]));
            if a == b {
                for i in 0..n {
                    anti[(i, i)] = anti[(i, i)] - S::of(2.0);
                }
            }
            let dev = anti.max_abs();
            if dev > max_dev {
                max_dev = dev;
                pair = Some((a, b));
            }
        }
    }
    let max_dev_f = max_dev.to_f64_lossy();
    let sym_dev_f = sym_dev.to_f64_lossy();
    let pass = max_dev_f <= tol && sym_dev_f <= tol;
    RelationReport {
        pass,
        max_deviation: max_dev_f,
        violating_pair: if pass { None } else { pair },
        symmetry_deviation: sym_dev_f,
    }
}

/// Plain-text dump: header `m l k q`, then m+1 blocks of 2l rows of 2l
/// signed integers.
pub fn write_matrix_dump<W: Write>(sys: &CliffordSystem, w: &mut W) -> io::Result<()> {
    writeln!(w, "{} {} {} {}", sys.m, sys.l, sys.k, sys.q)?;
    for (idx, pa) in sys.p.iter().enumerate() {
        if idx > 0 {
            writeln!(w)?;
        }
        for i in 0..pa.n {
            let row: Vec<String> = (0..pa.n).map(|j| pa.get(i, j).to_string()).collect();
            writeln!(w, "{}", row.join(" "))?;
        }
    }
    Ok(())
}

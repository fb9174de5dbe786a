//! Exact cyclotomic numbers over the Zumbroich basis.
//!
//! Elements of Q(zeta_n) are stored as sparse rational combinations of the
//! basis roots zeta_n^e for e in the Zumbroich basis of n (the basis GAP uses
//! for character-table data, so bundled values import verbatim). On
//! construction every element is rewritten into its minimal cyclotomic field,
//! so equality is plain structural equality and rationals always have
//! conductor 1.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

use super::nt::{divisors, factorize, gcd, lcm, phi};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(n.into(), d.into())
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: BTreeMap<u64, Rational>,
}

/// Residues mod q = p^a || n excluded from the Zumbroich basis. Memoized
/// per thread; conductors in play are tiny.
fn forbidden_residues(n: u64) -> std::rc::Rc<Vec<(u64, u64, Vec<bool>)>> {
    use std::cell::RefCell;
    use std::rc::Rc;
    type Cached = Rc<Vec<(u64, u64, Vec<bool>)>>;
    thread_local! {
        static CACHE: RefCell<BTreeMap<u64, Cached>> =
            const { RefCell::new(BTreeMap::new()) };
    }
    CACHE.with(|cache| {
        if let Some(hit) = cache.borrow().get(&n) {
            return hit.clone();
        }
        let fresh = Rc::new(forbidden_residues_uncached(n));
        cache.borrow_mut().insert(n, fresh.clone());
        fresh
    })
}

fn forbidden_residues_uncached(n: u64) -> Vec<(u64, u64, Vec<bool>)> {
    let mut out = Vec::new();
    for (p, q) in factorize(n) {
        let m = n / q;
        let mut bad = vec![false; q as usize];
        if p == 2 {
            for j in q / 2..q {
                bad[((m * j) % q) as usize] = true;
            }
        } else {
            let half = (q / p - 1) / 2;
            for j in 0..=2 * half {
                // j runs over -half..=half as j - half
                let s = (m as i128) * ((j as i128) - (half as i128));
                bad[(s.rem_euclid(q as i128)) as usize] = true;
            }
        }
        out.push((p, q, bad));
    }
    out
}

fn in_basis(forb: &[(u64, u64, Vec<bool>)], e: u64) -> bool {
    forb.iter().all(|(_, q, bad)| !bad[(e % q) as usize])
}

pub fn zumbroich_basis(n: u64) -> Vec<u64> {
    let forb = forbidden_residues(n);
    let basis: Vec<u64> = (0..n).filter(|&e| in_basis(&forb, e)).collect();
    debug_assert_eq!(basis.len() as u64, phi(n));
    basis
}

/// zeta_n^e expressed over the basis, as exponent -> integer coefficient.
/// Memoized per thread alongside the basis data.
fn reduce_exponent(n: u64, e: u64) -> std::rc::Rc<BTreeMap<u64, i64>> {
    use std::cell::RefCell;
    use std::rc::Rc;
    type Cached = Rc<BTreeMap<u64, i64>>;
    thread_local! {
        static CACHE: RefCell<BTreeMap<(u64, u64), Cached>> =
            const { RefCell::new(BTreeMap::new()) };
    }
    let e = e % n;
    CACHE.with(|cache| {
        if let Some(hit) = cache.borrow().get(&(n, e)) {
            return hit.clone();
        }
        let forb = forbidden_residues(n);
        let fresh = Rc::new(reduce_exponent_inner(n, e, &forb));
        cache.borrow_mut().insert((n, e), fresh.clone());
        fresh
    })
}

fn reduce_exponent_inner(n: u64, e: u64, forb: &[(u64, u64, Vec<bool>)]) -> BTreeMap<u64, i64> {
    for (p, q, bad) in forb {
        if bad[(e % q) as usize] {
            // zeta^e = - sum_{j=1..p-1} zeta^{e + j n/p}
            let mut out = BTreeMap::new();
            for j in 1..*p {
                for (e2, c) in reduce_exponent_inner(n, (e + j * (n / p)) % n, forb) {
                    let slot = out.entry(e2).or_insert(0);
                    *slot -= c;
                    if *slot == 0 {
                        out.remove(&e2);
                    }
                }
            }
            return out;
        }
    }
    BTreeMap::from([(e, 1)])
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_rational(v: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !v.is_zero() {
            coeffs.insert(0, v);
        }
        Cyclotomic {
            conductor: 1,
            coeffs,
        }
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(rat(v))
    }

    /// zeta_n^e, fully normalized (minimal conductor, basis form).
    pub fn root_of_unity(n: u64, e: i64) -> Self {
        assert!(n >= 1);
        let e = (e.rem_euclid(n as i64)) as u64;
        let g = gcd(e, n);
        let (mut n, mut e) = (n / g, e / g);
        let mut sign = 1i64;
        if n % 4 == 2 {
            // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
            let m = n / 2;
            if e % 2 == 1 {
                sign = -1;
            }
            e = (e * m.div_ceil(2)) % m;
            n = m;
        }
        let mut coeffs = BTreeMap::new();
        for (&e2, &c) in reduce_exponent(n, e).iter() {
            coeffs.insert(e2, rat(sign * c));
        }
        let mut out = Cyclotomic { conductor: n, coeffs };
        out.minimize();
        out
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &BTreeMap<u64, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.conductor == 1 {
            Some(self.coeffs.get(&0).cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// Coefficients of self over the basis of Q(zeta_m), m a multiple of the
    /// conductor.
    fn embed_coeffs(&self, m: u64) -> BTreeMap<u64, Rational> {
        assert_eq!(m % self.conductor, 0);
        let f = m / self.conductor;
        let mut out: BTreeMap<u64, Rational> = BTreeMap::new();
        for (e, v) in &self.coeffs {
            for (&e2, &c) in reduce_exponent(m, e * f).iter() {
                let slot = out.entry(e2).or_insert_with(Rational::zero);
                *slot += v * rat(c);
                if slot.is_zero() {
                    out.remove(&e2);
                }
            }
        }
        out
    }

    fn galois_raw(&self, j: u64) -> BTreeMap<u64, Rational> {
        debug_assert_eq!(gcd(j, self.conductor), 1);
        let mut out: BTreeMap<u64, Rational> = BTreeMap::new();
        for (e, v) in &self.coeffs {
            for (&e2, &c) in reduce_exponent(self.conductor, (e * j) % self.conductor).iter() {
                let slot = out.entry(e2).or_insert_with(Rational::zero);
                *slot += v * rat(c);
                if slot.is_zero() {
                    out.remove(&e2);
                }
            }
        }
        out
    }

    /// Apply zeta -> zeta^j; j must be coprime to the conductor.
    pub fn galois(&self, j: u64) -> Result<Self, String> {
        if gcd(j, self.conductor) != 1 {
            return Err(format!(
                "galois exponent {} not coprime to conductor {}",
                j, self.conductor
            ));
        }
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: self.galois_raw(j % self.conductor.max(2).min(self.conductor)),
        })
    }

    /// Rewrite into the smallest cyclotomic field containing the element.
    fn minimize(&mut self) {
        if self.coeffs.is_empty() {
            self.conductor = 1;
            return;
        }
        if self.conductor == 1 {
            return;
        }
        let n = self.conductor;
        for m in divisors(n) {
            if m == n || m % 4 == 2 {
                continue;
            }
            let fixed = (1..n)
                .filter(|j| gcd(*j, n) == 1 && (j - 1) % m == 0)
                .all(|j| self.galois_raw(j) == self.coeffs);
            if fixed {
                // element lies in Q(zeta_m); solve for its coordinates there
                let basis_m = zumbroich_basis(m);
                let cols: Vec<BTreeMap<u64, Rational>> = basis_m
                    .iter()
                    .map(|&e| {
                        Cyclotomic {
                            conductor: m,
                            coeffs: BTreeMap::from([(e, Rational::one())]),
                        }
                        .embed_coeffs(n)
                    })
                    .collect();
                let sol = solve_sparse(&zumbroich_basis(n), &cols, &self.coeffs)
                    .expect("descent system must be consistent");
                self.conductor = m;
                self.coeffs = basis_m
                    .into_iter()
                    .zip(sol)
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                return;
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = lcm(self.conductor, other.conductor);
        let mut coeffs = self.embed_coeffs(n);
        for (e, v) in other.embed_coeffs(n) {
            let slot = coeffs.entry(e).or_insert_with(Rational::zero);
            *slot += v;
            if slot.is_zero() {
                coeffs.remove(&e);
            }
        }
        let mut out = Cyclotomic { conductor: n, coeffs };
        out.minimize();
        out
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, -v.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = lcm(self.conductor, other.conductor);
        let a = self.embed_coeffs(n);
        let b = other.embed_coeffs(n);
        let mut coeffs: BTreeMap<u64, Rational> = BTreeMap::new();
        for (e1, v1) in &a {
            for (e2, v2) in &b {
                for (&e3, &c) in reduce_exponent(n, (e1 + e2) % n).iter() {
                    let slot = coeffs.entry(e3).or_insert_with(Rational::zero);
                    *slot += v1 * v2 * rat(c);
                    if slot.is_zero() {
                        coeffs.remove(&e3);
                    }
                }
            }
        }
        let mut out = Cyclotomic { conductor: n, coeffs };
        out.minimize();
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * r)).collect(),
        }
    }

    /// Trace to Q over the element's own minimal field Q(zeta_n).
    pub fn trace_to_q(&self) -> Rational {
        let mut t = Rational::zero();
        for (e, v) in &self.coeffs {
            t += v * root_trace(self.conductor, *e as i64);
        }
        t
    }

    /// Trace to Q over Q(zeta_n) for a field containing the element.
    pub fn trace_in(&self, n: u64) -> Rational {
        assert_eq!(
            n % self.conductor,
            0,
            "element of conductor {} does not lie in Q(zeta_{})",
            self.conductor,
            n
        );
        self.trace_to_q() * rat(phi(n) as i64) / rat(phi(self.conductor) as i64)
    }

    /// Tr_{Q(zeta_n)/Q}(self * zeta_n^e) by linearity of the trace, without
    /// forming the product: Tr(zeta_n^a zeta_n^e) = root_trace(n, a + e).
    /// Much cheaper than `mul` + `trace_in` on hot paths since it needs no
    /// basis reduction or conductor descent.
    pub fn trace_in_times_root(&self, n: u64, e: i64) -> Rational {
        assert_eq!(
            n % self.conductor,
            0,
            "element of conductor {} does not lie in Q(zeta_{})",
            self.conductor,
            n
        );
        let f = (n / self.conductor) as i64;
        let mut t = Rational::zero();
        for (a, v) in &self.coeffs {
            t += v * root_trace(n, *a as i64 * f + e);
        }
        t
    }
}

/// Tr_{Q(zeta_n)/Q}(zeta_n^m) = moebius(n/g) phi(n) / phi(n/g), g = gcd(m, n).
pub fn root_trace(n: u64, m: i64) -> Rational {
    let m = (m.rem_euclid(n as i64)) as u64;
    let g = gcd(m, n);
    ratio(
        super::nt::moebius(n / g) * phi(n) as i64,
        phi(n / g) as i64,
    )
}

/// Solve sum_j x_j cols[j] = target over Q; sparse maps keyed by basis
/// exponents. Returns None if inconsistent.
fn solve_sparse(
    row_index: &[u64],
    cols: &[BTreeMap<u64, Rational>],
    target: &BTreeMap<u64, Rational>,
) -> Option<Vec<Rational>> {
    let idx: BTreeMap<u64, usize> = row_index.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let rows = row_index.len();
    let ncols = cols.len();
    let mut m = vec![vec![Rational::zero(); ncols + 1]; rows];
    for (j, col) in cols.iter().enumerate() {
        for (e, v) in col {
            m[idx[e]][j] = v.clone();
        }
    }
    for (e, v) in target {
        m[idx[e]][ncols] = v.clone();
    }
    let mut piv_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let piv = (r..rows).find(|&i| !m[i][c].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => continue,
        };
        m.swap(r, piv);
        let pv = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v /= pv.clone();
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        piv_cols.push(c);
        r += 1;
    }
    for row in m.iter().skip(r) {
        if !row[ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); ncols];
    for (ri, c) in piv_cols.into_iter().enumerate() {
        x[c] = m[ri][ncols].clone();
    }
    Some(x)
}

impl std::fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cyc({})", super::parse::print(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(n: u64, e: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, e)
    }

    #[test]
    fn vanishing_sums() {
        let z3 = root(3, 1);
        assert_eq!(z3.add(&z3.mul(&z3)), Cyclotomic::from_integer(-1));
        let z5: Vec<_> = (1..5).map(|e| root(5, e)).collect();
        let s = z5.iter().fold(Cyclotomic::zero(), |a, b| a.add(b));
        assert_eq!(s, Cyclotomic::from_integer(-1));
    }

    #[test]
    fn conductor_lowering() {
        let z8 = root(8, 1);
        let sq = z8.mul(&z8);
        assert_eq!(sq, root(4, 1));
        assert_eq!(sq.conductor(), 4);
        // zeta_6 lives in conductor 3
        assert_eq!(root(6, 1).conductor(), 3);
        assert_eq!(root(6, 1), root(3, 2).neg());
    }

    #[test]
    fn mul_absorbing() {
        let x = Cyclotomic::from_integer(1).add(&root(5, 1));
        assert!(x.mul(&Cyclotomic::zero()).is_zero());
    }

    #[test]
    fn root_trace_values() {
        assert_eq!(root_trace(5, 1), rat(-1));
        assert_eq!(root_trace(12, 0), rat(4));
        assert_eq!(root_trace(8, 2), rat(0));
        // periodicity
        assert_eq!(root_trace(12, 5), root_trace(12, 17));
    }

    #[test]
    fn traces() {
        assert_eq!(root(11, 1).trace_to_q(), rat(-1));
        assert_eq!(Cyclotomic::from_integer(1).trace_to_q(), rat(1));
        // trace as sum of Galois conjugates of zeta_8^2 over Q(zeta_8)
        let a = root(8, 2);
        let mut s = a.clone();
        for j in [3u64, 5, 7] {
            s = s.add(&a.galois(j).unwrap());
        }
        assert_eq!(s.as_rational().unwrap(), a.trace_in(8));
        // constant viewed in a larger field
        assert_eq!(Cyclotomic::from_integer(1).trace_in(5), rat(4));
    }

    #[test]
    fn galois_rejects_noncoprime() {
        assert!(root(8, 1).galois(2).is_err());
        // rationals are fixed
        let c = Cyclotomic::from_rational(ratio(7, 2));
        assert_eq!(c.galois(5).unwrap(), c);
    }

    #[test]
    fn galois_exponent_map() {
        let a = root(8, 1).add(&root(8, 7));
        let b = root(8, 3).add(&root(8, 5));
        assert_eq!(a.galois(3).unwrap(), b);
    }
}

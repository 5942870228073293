//! Counting adjacency-hopping de Bruijn sequences three independent ways:
//! the closed form, the BEST theorem via an exact Laplacian cofactor, and
//! brute-force tour enumeration. Also computes the exact characteristic
//! polynomial of the adjacency matrix, whose spectrum the counts rest on.
//!
//! Note on the tour-count formula: the printed eigenvalue product carries a
//! factor prod(outdegree - 1) per vertex, but the BEST theorem and the
//! formula's own derivation use prod(outdegree - 1)!. The factorial reading
//! is implemented here; for the corresponding graph that factor is
//! ((k-2)!)^l.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::euler::enumerate_tours;
use crate::graph::{build_graph, CorrespondingGraph, IntMatrix, MATRIX_DIM_CAP};
use crate::types::Parameters;

/// Dimension cap for exact characteristic polynomials.
pub const CHARPOLY_DIM_CAP: usize = 200;

/// Exact counts of H(k, n) from up to three independent methods.
#[derive(Debug, Clone)]
pub struct CountReport {
    pub k: usize,
    pub n: usize,
    pub closed_form: BigUint,
    pub best_theorem: Option<BigUint>,
    pub brute_force: Option<BigUint>,
    pub methods_agree: bool,
}

impl Serialize for CountReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // counts as decimal strings; they overflow every native JSON number
        let mut s = serializer.serialize_struct("CountReport", 6)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("closed_form", &self.closed_form.to_string())?;
        s.serialize_field("best_theorem", &self.best_theorem.as_ref().map(|v| v.to_string()))?;
        s.serialize_field("brute_force", &self.brute_force.as_ref().map(|v| v.to_string()))?;
        s.serialize_field("methods_agree", &self.methods_agree)?;
        s.end()
    }
}

fn factorial(m: usize) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// The number of H(k, n) by the closed form: (k-1)! for n = 1, and for
/// k >= 2, n >= 2 the exact integer rearrangement
/// k^(k-2) * [(k-1)!]^l / (k-1)^(k-2+n) with l = k(k-1)^(n-2).
/// Divisibility is asserted before dividing.
pub fn count_closed_form(params: Parameters) -> Result<BigUint> {
    let (k, n) = (params.k, params.n);
    if k == 1 && n > 1 {
        return Err(Error::NonexistentSequence { n });
    }
    if n == 1 {
        return Ok(factorial(k - 1));
    }
    let l = params.vertex_count();
    let numerator = BigUint::from(k).pow(k as u32 - 2) * factorial(k - 1).pow(l as u32);
    let denominator = BigUint::from(k - 1).pow((k - 2 + n) as u32);
    if (&numerator % &denominator) != BigUint::zero() {
        return Err(Error::IntegralityViolation { k, n });
    }
    Ok(numerator / denominator)
}

/// The Laplacian L = (k-1)I - A of a corresponding graph.
pub fn laplacian_matrix(g: &CorrespondingGraph) -> IntMatrix {
    let dim = g.vertex_count();
    let degree = BigInt::from(g.params().k - 1);
    let mut m = IntMatrix::zeros(dim);
    for i in 0..dim {
        m.set(i, i, degree.clone());
    }
    for e in g.edges() {
        m.set(e.from, e.to, BigInt::from(-1));
    }
    m
}

/// Determinant by fraction-free Bareiss elimination with row pivoting.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let dim = m.dim();
    if dim == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for p in 0..dim - 1 {
        if a[p][p].is_zero() {
            match (p + 1..dim).find(|&r| !a[r][p].is_zero()) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in p + 1..dim {
            for j in p + 1..dim {
                let v = (&a[p][p] * &a[i][j] - &a[i][p] * &a[p][j]) / &prev;
                a[i][j] = v;
            }
            a[i][p] = BigInt::zero();
        }
        prev = a[p][p].clone();
    }
    sign * a[dim - 1][dim - 1].clone()
}

/// The principal cofactor of `m` obtained by deleting its first row and column.
pub fn principal_cofactor(m: &IntMatrix) -> BigInt {
    let dim = m.dim();
    let mut minor = IntMatrix::zeros(dim - 1);
    for i in 1..dim {
        for j in 1..dim {
            minor.set(i - 1, j - 1, m.get(i, j).clone());
        }
    }
    determinant(&minor)
}

/// Counts Eulerian tours with fixed first edge via the BEST theorem:
/// (arborescence count, a Laplacian cofactor by the Matrix-Tree theorem)
/// times ((k-2)!)^l.
pub fn count_best_theorem(g: &CorrespondingGraph) -> Result<BigUint> {
    let l = g.vertex_count();
    if l > MATRIX_DIM_CAP {
        return Err(Error::SizeLimit {
            what: "Laplacian dimension",
            actual: l,
            cap: MATRIX_DIM_CAP,
        });
    }
    let cofactor = principal_cofactor(&laplacian_matrix(g));
    debug_assert!(!cofactor.is_negative());
    let arborescences = cofactor.to_biguint().expect("cofactor is non-negative");
    let k = g.params().k;
    Ok(arborescences * factorial(k - 2).pow(l as u32))
}

/// Exact integer coefficients of det(xI - A), constant term first
/// (coefficient i belongs to x^i); monic of degree dim.
///
/// Computed by rational Hessenberg reduction followed by the La Budde
/// recurrence; the rational coefficients are asserted integral at the end.
pub fn characteristic_polynomial(a: &IntMatrix) -> Result<Vec<BigInt>> {
    let dim = a.dim();
    if dim > CHARPOLY_DIM_CAP {
        return Err(Error::SizeLimit {
            what: "characteristic polynomial dimension",
            actual: dim,
            cap: CHARPOLY_DIM_CAP,
        });
    }
    let mut h: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| BigRational::from_integer(a.get(i, j).clone()))
                .collect()
        })
        .collect();

    // similarity reduction to upper Hessenberg form with pivoting
    for col in 0..dim.saturating_sub(2) {
        let pivot_row = match (col + 1..dim).find(|&r| !h[r][col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        if pivot_row != col + 1 {
            h.swap(pivot_row, col + 1);
            for row in h.iter_mut() {
                row.swap(pivot_row, col + 1);
            }
        }
        let pivot = h[col + 1][col].clone();
        for r in col + 2..dim {
            if h[r][col].is_zero() {
                continue;
            }
            let factor = &h[r][col] / &pivot;
            for j in 0..dim {
                let delta = &factor * &h[col + 1][j];
                h[r][j] -= delta;
            }
            for i in 0..dim {
                let delta = &factor * &h[i][r];
                h[i][col + 1] += delta;
            }
        }
    }

    // La Budde recurrence: p_i = char poly of the leading i-by-i block
    let mut polys: Vec<Vec<BigRational>> = Vec::with_capacity(dim + 1);
    polys.push(vec![BigRational::one()]);
    for i in 1..=dim {
        let mut p = shift_times_x_minus(&polys[i - 1], &h[i - 1][i - 1]);
        let mut beta_product = BigRational::one();
        for m in 1..i {
            beta_product *= &h[i - m][i - m - 1];
            if beta_product.is_zero() {
                break;
            }
            let weight = &h[i - m - 1][i - 1] * &beta_product;
            for (deg, c) in polys[i - m - 1].iter().enumerate() {
                let delta = &weight * c;
                p[deg] -= delta;
            }
        }
        polys.push(p);
    }

    Ok(polys
        .pop()
        .unwrap()
        .into_iter()
        .map(|c| {
            assert!(
                c.is_integer(),
                "characteristic polynomial of an integer matrix must have integer coefficients"
            );
            c.to_integer()
        })
        .collect())
}

// (x - alpha) * p, coefficients constant-term first
fn shift_times_x_minus(p: &[BigRational], alpha: &BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (deg, c) in p.iter().enumerate() {
        out[deg + 1] += c;
        out[deg] -= alpha * c;
    }
    out
}

/// The expected characteristic polynomial of the adjacency matrix of G_k^n:
/// x^(l-k) (x+1)^(k-1) (x-(k-1)), expanded to integer coefficients.
pub fn expected_characteristic_polynomial(params: Parameters) -> Vec<BigInt> {
    let (k, l) = (params.k, params.vertex_count());
    let mut poly = vec![BigInt::one()]; // 1
    for _ in 0..k - 1 {
        poly = poly_mul(&poly, &[BigInt::one(), BigInt::one()]); // (x + 1)
    }
    poly = poly_mul(&poly, &[BigInt::from(-((k as i64) - 1)), BigInt::one()]); // (x - (k-1))
    let mut out = vec![BigInt::zero(); l - k];
    out.extend(poly); // multiply by x^(l-k)
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Runs every counting method the size caps permit and compares them.
pub fn count_all_methods(
    params: Parameters,
    enable_brute: bool,
    brute_cap: Option<usize>,
) -> Result<CountReport> {
    let closed_form = count_closed_form(params)?;
    let mut best_theorem = None;
    let mut brute_force = None;
    if params.k >= 2 && params.n >= 2 {
        let g = build_graph(params)?;
        if g.vertex_count() <= MATRIX_DIM_CAP {
            best_theorem = Some(count_best_theorem(&g)?);
        }
        if enable_brute {
            match enumerate_tours(&g, 0, brute_cap) {
                Ok(c) => brute_force = Some(c),
                Err(Error::SizeLimit { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    let methods_agree = best_theorem.iter().all(|v| *v == closed_form)
        && brute_force.iter().all(|v| *v == closed_form);
    Ok(CountReport {
        k: params.k,
        n: params.n,
        closed_form,
        best_theorem,
        brute_force,
        methods_agree,
    })
}

/// The printed prefactor form of the tour-count formula,
/// (k/(k-1))^(k-2) [(k-1)!]^l / (k-1)^n, as an exact rational.
pub fn printed_form(params: Parameters) -> BigRational {
    let (k, n) = (params.k, params.n);
    let l = params.vertex_count();
    let ratio = BigRational::new(BigInt::from(k), BigInt::from(k - 1));
    let fact = BigRational::from_integer(BigInt::from_biguint(
        Sign::Plus,
        factorial(k - 1).pow(l as u32),
    ));
    let denom = BigRational::from_integer(BigInt::from(k - 1).pow(n as u32));
    pow_rational(&ratio, k - 2) * fact / denom
}

/// The derivation's final form, k^(k-1) [(k-1)!]^l / (l (k-1)^k).
pub fn proof_form(params: Parameters) -> BigRational {
    let k = params.k;
    let l = params.vertex_count();
    let num = BigInt::from(k).pow(k as u32 - 1)
        * BigInt::from_biguint(Sign::Plus, factorial(k - 1).pow(l as u32));
    let den = BigInt::from(l) * BigInt::from(k - 1).pow(k as u32);
    BigRational::new(num, den)
}

fn pow_rational(r: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn closed_form_first_branch() {
        assert_eq!(count_closed_form(Parameters::new(5, 1)).unwrap(), big(24));
        for (k, want) in [(1, 1u64), (2, 1), (3, 2), (4, 6), (8, 5040)] {
            assert_eq!(count_closed_form(Parameters::new(k, 1)).unwrap(), big(want));
        }
    }

    #[test]
    fn closed_form_second_branch() {
        assert_eq!(count_closed_form(Parameters::new(2, 4)).unwrap(), big(1));
        assert_eq!(count_closed_form(Parameters::new(3, 3)).unwrap(), big(12));
        assert_eq!(count_closed_form(Parameters::new(4, 2)).unwrap(), big(256));
    }

    #[test]
    fn closed_form_rejects_k1() {
        assert_eq!(
            count_closed_form(Parameters::new(1, 2)).unwrap_err(),
            Error::NonexistentSequence { n: 2 }
        );
    }

    #[test]
    fn laplacian_structure() {
        let g = build_graph(Parameters::new(3, 3)).unwrap();
        let l = laplacian_matrix(&g);
        let a = g.adjacency_matrix();
        for i in 0..l.dim() {
            let mut row_sum = BigInt::zero();
            for j in 0..l.dim() {
                // L = (k-1)I - A entry-wise
                let expected = if i == j {
                    BigInt::from(2) - a.get(i, j)
                } else {
                    -a.get(i, j)
                };
                assert_eq!(*l.get(i, j), expected);
                row_sum += l.get(i, j);
            }
            assert!(row_sum.is_zero());
        }
    }

    #[test]
    fn best_theorem_counts() {
        for (k, n, want) in [(2, 2, 1u64), (3, 2, 3), (3, 3, 12), (4, 2, 256)] {
            let g = build_graph(Parameters::new(k, n)).unwrap();
            assert_eq!(count_best_theorem(&g).unwrap(), big(want), "k={k} n={n}");
        }
    }

    #[test]
    fn cofactor_of_k3_laplacian_is_three() {
        let g = build_graph(Parameters::new(3, 2)).unwrap();
        assert_eq!(principal_cofactor(&laplacian_matrix(&g)), BigInt::from(3));
    }

    #[test]
    fn bareiss_determinant_small_cases() {
        let mut m = IntMatrix::zeros(2);
        m.set(0, 0, BigInt::from(3));
        m.set(0, 1, BigInt::from(7));
        m.set(1, 0, BigInt::from(1));
        m.set(1, 1, BigInt::from(-2));
        assert_eq!(determinant(&m), BigInt::from(-13));

        // zero pivot forces a row swap
        let mut m = IntMatrix::zeros(3);
        m.set(0, 1, BigInt::from(2));
        m.set(1, 0, BigInt::from(5));
        m.set(2, 2, BigInt::from(4));
        assert_eq!(determinant(&m), BigInt::from(-40));

        assert_eq!(determinant(&IntMatrix::identity(4)), BigInt::one());
        assert_eq!(determinant(&IntMatrix::zeros(3)), BigInt::zero());
    }

    #[test]
    fn charpoly_g22() {
        let g = build_graph(Parameters::new(2, 2)).unwrap();
        let p = characteristic_polynomial(&g.adjacency_matrix()).unwrap();
        // x^2 - 1
        assert_eq!(p, vec![BigInt::from(-1), BigInt::zero(), BigInt::one()]);
    }

    #[test]
    fn charpoly_g32() {
        let g = build_graph(Parameters::new(3, 2)).unwrap();
        let p = characteristic_polynomial(&g.adjacency_matrix()).unwrap();
        // (x+1)^2 (x-2) = x^3 - 3x - 2
        assert_eq!(
            p,
            vec![
                BigInt::from(-2),
                BigInt::from(-3),
                BigInt::zero(),
                BigInt::one()
            ]
        );
        assert_eq!(p, expected_characteristic_polynomial(Parameters::new(3, 2)));
    }

    #[test]
    fn charpoly_g33() {
        let g = build_graph(Parameters::new(3, 3)).unwrap();
        let p = characteristic_polynomial(&g.adjacency_matrix()).unwrap();
        // x^3 (x+1)^2 (x-2)
        assert_eq!(p, expected_characteristic_polynomial(Parameters::new(3, 3)));
        // trace coefficient (x^(l-1)) vanishes: the graph is loopless
        assert!(p[p.len() - 2].is_zero());
    }

    #[test]
    fn charpoly_matches_product_form_on_grid() {
        for k in 2..=5 {
            for n in 2..=4 {
                let p = Parameters::new(k, n);
                if p.vertex_count() > CHARPOLY_DIM_CAP {
                    continue;
                }
                let g = build_graph(p).unwrap();
                let got = characteristic_polynomial(&g.adjacency_matrix()).unwrap();
                assert_eq!(got, expected_characteristic_polynomial(p), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn count_all_methods_agreement() {
        let r = count_all_methods(Parameters::new(3, 3), true, None).unwrap();
        assert_eq!(r.closed_form, big(12));
        assert_eq!(r.best_theorem, Some(big(12)));
        assert_eq!(r.brute_force, Some(big(12)));
        assert!(r.methods_agree);

        let r = count_all_methods(Parameters::new(4, 2), true, None).unwrap();
        assert_eq!(r.closed_form, big(256));
        assert_eq!(r.best_theorem, Some(big(256)));
        assert_eq!(r.brute_force, Some(big(256)));
        assert!(r.methods_agree);

        let r = count_all_methods(Parameters::new(6, 1), true, None).unwrap();
        assert_eq!(r.closed_form, big(120));
        assert!(r.best_theorem.is_none());
        assert!(r.brute_force.is_none());
        assert!(r.methods_agree);
    }

    #[test]
    fn printed_and_proof_forms_agree() {
        for k in 2..=6 {
            for n in 2..=4 {
                let p = Parameters::new(k, n);
                assert_eq!(printed_form(p), proof_form(p), "k={k} n={n}");
                let closed = BigRational::from_integer(BigInt::from_biguint(
                    Sign::Plus,
                    count_closed_form(p).unwrap(),
                ));
                assert_eq!(printed_form(p), closed, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn count_report_serializes_counts_as_strings() {
        let r = count_all_methods(Parameters::new(3, 3), false, None).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["closed_form"], "12");
        assert_eq!(json["best_theorem"], "12");
        assert!(json["brute_force"].is_null());
    }
}

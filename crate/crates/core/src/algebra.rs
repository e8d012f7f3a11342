//! Inclusion matrices, exact rank, and the multilinear polynomials attached to
//! an intersecting family.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination over the
//! integers. The elimination runs in checked `i128` arithmetic and restarts in
//! arbitrary precision if an intermediate minor overflows, so every rank is
//! exact.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::Serialize;

use crate::ekr_pipeline::{decompose, EkrDecomposition};
use crate::error::{Error, Result};
use crate::set_core::{all_k_subsets, format_family, k_subsets_of, parse_family, Subset, UniformFamily};

/// Rank over the rationals of an integer matrix given by rows.
///
/// Rows must all have the same length.
pub fn exact_rank<T: Copy + Into<i128>>(rows: &[Vec<T>]) -> usize {
    let wide: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.into()).collect())
        .collect();
    if let Some(rank) = bareiss_rank(wide.clone()) {
        return rank;
    }
    let big = wide
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    bareiss_rank(big).expect("arbitrary precision cannot overflow")
}

/// Fraction-free Gaussian elimination. Returns `None` if `T` overflows.
///
/// After each step every live entry is a minor of the input, and the division
/// by the previous pivot is exact. When the new pivot equals the previous one,
/// the update `a - f * pivot_row / p` only touches the nonzero columns of the
/// pivot row, and rows with a zero in the pivot column are left alone; pivots
/// are chosen to make that case as common as possible.
fn bareiss_rank<T>(mut a: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Ord + Zero + One + Signed + CheckedMul + CheckedSub + CheckedDiv,
{
    let rows = a.len();
    let Some(cols) = a.first().map(Vec::len) else {
        return Some(0);
    };
    assert!(a.iter().all(|r| r.len() == cols), "ragged matrix");

    let mut nnz: Vec<usize> = a.iter().map(|r| r.iter().filter(|x| !x.is_zero()).count()).collect();
    let mut prev = T::one();
    let mut rank = 0;

    for c in 0..cols {
        if rank == rows {
            break;
        }
        let pick = (rank..rows)
            .filter(|&r| !a[r][c].is_zero())
            .min_by_key(|&r| (a[r][c].abs() != prev, nnz[r], r));
        let Some(pick) = pick else { continue };
        a.swap(rank, pick);
        nnz.swap(rank, pick);
        if a[rank][c] == -prev.clone() {
            for x in a[rank].iter_mut() {
                *x = -x.clone();
            }
        }

        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let p = pivot_row[c].clone();
        let support: Vec<usize> = (c + 1..cols).filter(|&j| !pivot_row[j].is_zero()).collect();

        for (offset, row) in tail.iter_mut().enumerate() {
            let r = rank + 1 + offset;
            let f = row[c].clone();
            if p == prev {
                if f.is_zero() {
                    continue;
                }
                for &j in &support {
                    let delta = f.checked_mul(&pivot_row[j])?.checked_div(&p)?;
                    let before = row[j].is_zero();
                    row[j] = row[j].checked_sub(&delta)?;
                    match (before, row[j].is_zero()) {
                        (true, false) => nnz[r] += 1,
                        (false, true) => nnz[r] -= 1,
                        _ => {}
                    }
                }
            } else {
                for j in c + 1..cols {
                    let before = row[j].is_zero();
                    let cross = f.checked_mul(&pivot_row[j])?;
                    row[j] = p.checked_mul(&row[j])?.checked_sub(&cross)?.checked_div(&prev)?;
                    match (before, row[j].is_zero()) {
                        (true, false) => nnz[r] += 1,
                        (false, true) => nnz[r] -= 1,
                        _ => {}
                    }
                }
            }
            if !f.is_zero() {
                row[c] = T::zero();
                nnz[r] -= 1;
            }
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

/// The 0-1 matrix `I(A, B)` with a one at `(A, B)` exactly when `A ⊇ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionMatrix {
    row_labels: Vec<Subset>,
    col_labels: Vec<Subset>,
    entries: Vec<Vec<u8>>,
}

/// Builds `I(rows, cols)`. Rows keep the given order and may mix cardinalities.
pub fn inclusion_matrix(rows: &[Subset], cols: &UniformFamily) -> Result<InclusionMatrix> {
    let n = cols.ground_n();
    let mut seen = BTreeSet::new();
    for r in rows {
        if r.ground_n() != n {
            return Err(Error::GroundMismatch {
                left: r.ground_n(),
                right: n,
            });
        }
        if !seen.insert(*r) {
            return Err(Error::Duplicate(r.to_vec()));
        }
    }
    let entries = rows
        .iter()
        .map(|r| cols.iter().map(|c| c.is_subset_of(r) as u8).collect())
        .collect();
    Ok(InclusionMatrix {
        row_labels: rows.to_vec(),
        col_labels: cols.sets().to_vec(),
        entries,
    })
}

impl InclusionMatrix {
    pub fn row_labels(&self) -> &[Subset] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Subset] {
        &self.col_labels
    }

    pub fn entries(&self) -> &[Vec<u8>] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row][col]
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.row_labels.len(), self.col_labels.len())
    }

    pub fn rank(&self) -> usize {
        exact_rank(&self.entries)
    }

    /// Text dump: `rows cols`, the 0/1 rows, then one labelled family section
    /// per row block and for the columns.
    ///
    /// ```text
    /// 3 4
    /// 0 0 1 1
    /// 1 0 0 0
    /// 0 1 0 0
    /// block rows 1
    /// 5 2
    /// 4 5
    /// block rows 2
    /// 5 1
    /// 2
    /// 3
    /// block cols 4
    /// 5 1
    /// 2
    /// 3
    /// 4
    /// 5
    /// ```
    ///
    /// Each maximal run of equal-size rows in increasing colex order forms one block.
    pub fn dump(&self) -> String {
        let (r, c) = self.shape();
        let mut out = format!("{r} {c}\n");
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(u8::to_string).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        let n = self.col_labels.first().or(self.row_labels.first()).map_or(1, Subset::ground_n);
        for block in self.row_labels.chunk_by(|x, y| x.len() == y.len() && x < y) {
            let fam = UniformFamily::new(n, block[0].len(), block.to_vec()).expect("rows are distinct");
            writeln!(out, "block rows {}", block.len()).unwrap();
            out.push_str(&format_family(&fam));
        }
        let k = self.col_labels.first().map_or(0, Subset::len);
        let cols = UniformFamily::new(n, k, self.col_labels.clone()).expect("columns are a family");
        writeln!(out, "block cols {}", cols.len()).unwrap();
        out.push_str(&format_family(&cols));
        out
    }

    /// Reads back [`InclusionMatrix::dump`], checking the entries against the labels.
    pub fn parse_dump(text: &str) -> Result<InclusionMatrix> {
        let err = |line: usize, message: &str| Error::Parse {
            line,
            message: message.to_string(),
        };
        let lines: Vec<&str> = text
            .strip_suffix('\n')
            .ok_or_else(|| err(0, "missing final newline"))?
            .split('\n')
            .collect();
        let dims: Vec<usize> = lines[0]
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err(1, "bad dimensions"))?;
        let [r, c] = dims[..] else {
            return Err(err(1, "expected \"rows cols\""));
        };
        let mut entries = Vec::with_capacity(r);
        for i in 0..r {
            let line = lines.get(1 + i).ok_or_else(|| err(2 + i, "missing row"))?;
            let row: Vec<u8> = line
                .split_whitespace()
                .map(|t| match t {
                    "0" => Ok(0),
                    "1" => Ok(1),
                    _ => Err(err(2 + i, "entries must be 0 or 1")),
                })
                .collect::<Result<_>>()?;
            if row.len() != c {
                return Err(err(2 + i, "wrong row length"));
            }
            entries.push(row);
        }
        let mut at = 1 + r;
        let mut row_labels = Vec::new();
        let mut col_labels = None;
        while at < lines.len() {
            let head: Vec<&str> = lines[at].split_whitespace().collect();
            let (kind, count) = match head[..] {
                ["block", kind, count] => (kind, count.parse::<usize>().map_err(|_| err(at + 1, "bad count"))?),
                _ => return Err(err(at + 1, "expected \"block <rows|cols> <count>\"")),
            };
            let end = at + 2 + count;
            if end > lines.len() {
                return Err(err(at + 1, "truncated block"));
            }
            let section = lines[at + 1..end].join("\n") + "\n";
            let fam = parse_family(&section)?;
            match kind {
                "rows" => row_labels.extend_from_slice(fam.sets()),
                "cols" => col_labels = Some(fam),
                _ => return Err(err(at + 1, "unknown block")),
            }
            at = end;
        }
        let cols = col_labels.ok_or_else(|| err(lines.len(), "missing column block"))?;
        let m = inclusion_matrix(&row_labels, &cols)?;
        if m.entries != entries {
            return Err(err(1, "entries disagree with labels"));
        }
        Ok(m)
    }
}

/// `I(F, ([n] choose s))`.
pub fn generalized_incidence_matrix(family: &UniformFamily, s: usize) -> Result<InclusionMatrix> {
    inclusion_matrix(family.sets(), &all_k_subsets(family.ground_n(), s)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrwReport {
    pub cols: usize,
    pub independent: bool,
    /// Pairwise intersection sizes of the family.
    pub l: Vec<usize>,
    pub rank: usize,
    pub rows: usize,
    pub s: usize,
}

/// Rank of the order-`s` incidence matrix of an `L`-intersecting family with `|L| <= s <= k`.
pub fn frw_report(family: &UniformFamily, s: usize) -> Result<FrwReport> {
    let l: Vec<usize> = family.intersection_sizes().into_iter().collect();
    if l.len() > s || s > family.k() {
        return Err(Error::Precondition {
            message: format!(
                "need |L| <= s <= k, got |L| = {}, s = {s}, k = {}",
                l.len(),
                family.k()
            ),
            sizes: l,
        });
    }
    let m = generalized_incidence_matrix(family, s)?;
    let rank = m.rank();
    let (rows, cols) = m.shape();
    Ok(FrwReport {
        cols,
        independent: rank == rows,
        l,
        rank,
        rows,
        s,
    })
}

/// Whether the rows of `I(F, ([n] choose s))` are linearly independent.
pub fn frw_independence_check(family: &UniformFamily, s: usize) -> Result<bool> {
    frw_report(family, s).map(|r| r.independent)
}

/// `I(G0 ∪ G1, ([n] \ {pivot} choose k-1))`, rows in block order `G0` then `G1`.
pub fn ekr_inclusion_matrix(d: &EkrDecomposition) -> Result<InclusionMatrix> {
    if d.n < 2 * d.k {
        return Err(Error::BoundNotApplicable { n: d.n, k: d.k });
    }
    let rows: Vec<Subset> = d.g0.iter().chain(d.g1.iter()).copied().collect();
    inclusion_matrix(&rows, &k_subsets_of(&d.window(), d.k - 1)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixProofReport {
    pub cols: usize,
    pub family_size: usize,
    pub independent: bool,
    pub rank: usize,
    pub rows: usize,
}

pub fn ekr_matrix_report(d: &EkrDecomposition) -> Result<MatrixProofReport> {
    let m = ekr_inclusion_matrix(d)?;
    let (rows, cols) = m.shape();
    let rank = m.rank();
    Ok(MatrixProofReport {
        cols,
        family_size: d.family_size(),
        independent: rank == rows && rows == d.family_size() && rank <= cols,
        rank,
        rows,
    })
}

/// Full row rank of the matrix certifies `|F| = rank <= C(n-1, k-1)`.
pub fn ekr_matrix_proof(d: &EkrDecomposition) -> Result<bool> {
    ekr_matrix_report(d).map(|r| r.independent)
}

/// A homogeneous multilinear polynomial in `x_i`, `i ≠ pivot`, keyed by monomial support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearPolynomial {
    pub n: usize,
    pub pivot: usize,
    pub degree: usize,
    pub coefficients: BTreeMap<Subset, i64>,
}

impl MultilinearPolynomial {
    /// Coefficients against `basis`, in basis order.
    pub fn coefficient_vector(&self, basis: &[Subset]) -> Vec<i64> {
        basis
            .iter()
            .map(|s| self.coefficients.get(s).copied().unwrap_or(0))
            .collect()
    }

    /// Evaluates at `x`, where `x[i - 1]` is the value of `x_i`.
    pub fn evaluate(&self, x: &[i64]) -> i64 {
        self.coefficients
            .iter()
            .map(|(s, c)| c * s.elements().map(|i| x[i - 1]).product::<i64>())
            .sum()
    }
}

impl std::fmt::Display for MultilinearPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *c != 1 {
                write!(f, "{c}*")?;
            }
            let vars: Vec<String> = s.elements().map(|e| format!("x{e}")).collect();
            if vars.is_empty() {
                f.write_str("1")?;
            } else {
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `p(F, x)`: the monomial `x_{F \ {pivot}}` when the pivot is in `F`, otherwise
/// the sum of `x_S` over the `(k-1)`-subsets `S` of `([n] \ {pivot}) \ F`.
pub fn build_polynomial(set: &Subset, n: usize, k: usize, pivot: usize) -> Result<MultilinearPolynomial> {
    if set.ground_n() != n {
        return Err(Error::GroundMismatch {
            left: set.ground_n(),
            right: n,
        });
    }
    if set.len() != k || k == 0 {
        return Err(Error::range(format!("{set} is not a nonempty {k}-set")));
    }
    if pivot == 0 || pivot > n {
        return Err(Error::range(format!("pivot {pivot} outside [1, {n}]")));
    }
    let degree = k - 1;
    let coefficients = if set.contains(pivot) {
        BTreeMap::from([(set.without(pivot), 1)])
    } else {
        let window = Subset::full(n)?.without(pivot);
        let outside = Subset::from_bits(n, window.bits() & !set.bits())?;
        k_subsets_of(&outside, degree)?.iter().map(|s| (*s, 1)).collect()
    };
    Ok(MultilinearPolynomial {
        n,
        pivot,
        degree,
        coefficients,
    })
}

/// The polynomials of a family in matrix order: members avoiding the pivot
/// first, ordered like their complements in `G0`, then members containing it
/// in colex order.
pub fn family_polynomials(d: &EkrDecomposition) -> Result<Vec<MultilinearPolynomial>> {
    let window = d.window();
    d.g0
        .iter()
        .map(|g| Subset::from_bits(d.n, window.bits() & !g.bits()))
        .chain(d.f1.iter().map(|s| Ok(*s)))
        .map(|f| build_polynomial(&f?, d.n, d.k, d.pivot))
        .collect()
}

/// Coefficient matrix of the family's polynomials in the monomial basis
/// `([n] \ {pivot} choose k-1)`, colex columns.
pub fn polynomial_coefficient_matrix(d: &EkrDecomposition) -> Result<Vec<Vec<i64>>> {
    if d.n < 2 * d.k {
        return Err(Error::BoundNotApplicable { n: d.n, k: d.k });
    }
    let basis = k_subsets_of(&d.window(), d.k - 1)?;
    Ok(family_polynomials(d)?
        .iter()
        .map(|p| p.coefficient_vector(basis.sets()))
        .collect())
}

pub fn polynomials_independent(family: &UniformFamily, pivot: usize) -> Result<bool> {
    let d = decompose(family, pivot)?;
    let m = polynomial_coefficient_matrix(&d)?;
    Ok(exact_rank(&m) == family.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ekr_pipeline::star;
    use crate::set_core::make_family;
    use num_rational::BigRational;

    fn fam(n: usize, k: usize, raw: &[&[usize]]) -> UniformFamily {
        let raw: Vec<Vec<usize>> = raw.iter().map(|r| r.to_vec()).collect();
        make_family(n, k, &raw).unwrap()
    }

    fn s(n: usize, e: &[usize]) -> Subset {
        Subset::new(n, e).unwrap()
    }

    /// Textbook elimination over `Q`, no pivoting strategy.
    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let (top, rest) = a.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            for row in rest {
                let f = &row[c] / &pivot_row[c];
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &f * p;
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn rank_examples() {
        assert_eq!(exact_rank(&vec![vec![1i64; 3]; 3]), 1);
        assert_eq!(exact_rank(&[vec![1i64, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]), 3);
        let m = generalized_incidence_matrix(&all_k_subsets(3, 2).unwrap(), 1).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(exact_rank::<i64>(&[]), 0);
        assert_eq!(exact_rank(&[Vec::<i64>::new(), Vec::new()]), 0);
    }

    #[test]
    fn rank_matches_rational_elimination_on_all_three_by_three() {
        for mask in 0u32..512 {
            let m: Vec<Vec<i64>> = (0..3)
                .map(|i| (0..3).map(|j| (mask >> (3 * i + j) & 1) as i64).collect())
                .collect();
            assert_eq!(exact_rank(&m), rational_rank(&m), "{m:?}");
        }
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // 3x3 minors of 1e18-sized entries are far beyond i128
        let big = |i: i64, j: i64| {
            let h = ((i * 5 + j + 1) as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
            (h % 1_000_000_000_000_000_000) as i64
        };
        let mut m: Vec<Vec<i64>> = (0..5).map(|i| (0..5).map(|j| big(i, j)).collect()).collect();
        let as_wide = |m: &[Vec<i64>]| -> Vec<Vec<i128>> {
            m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
        };
        assert!(bareiss_rank(as_wide(&m)).is_none());
        let rank = rational_rank(&m);
        assert_eq!(exact_rank(&m), rank);

        // a dependent row keeps the rank
        let combo: Vec<i64> = (0..5).map(|j| m[0][j] - m[1][j] + m[2][j]).collect();
        m.push(combo);
        assert_eq!(exact_rank(&m), rank);

        let huge = vec![vec![i64::MAX, i64::MIN], vec![i64::MIN, i64::MAX]];
        assert_eq!(exact_rank(&huge), 2);
    }

    #[test]
    fn inclusion_examples() {
        let singles = all_k_subsets(3, 1).unwrap();
        let m = inclusion_matrix(&[s(3, &[1, 2])], &singles).unwrap();
        assert_eq!(m.entries(), &[vec![1, 1, 0]]);

        let m = generalized_incidence_matrix(&all_k_subsets(3, 2).unwrap(), 1).unwrap();
        assert!(m.entries().iter().all(|r| r.iter().map(|&x| x as usize).sum::<usize>() == 2));

        let window = Subset::full(5).unwrap().without(1);
        let cols = k_subsets_of(&window, 2).unwrap();
        let m = inclusion_matrix(&[s(5, &[3, 5])], &cols).unwrap();
        let ones: Vec<usize> = (0..cols.len()).filter(|&j| m.get(0, j) == 1).collect();
        assert_eq!(ones.len(), 1);
        assert_eq!(cols.sets()[ones[0]], s(5, &[3, 5]));
    }

    #[test]
    fn inclusion_rejects_bad_rows() {
        let cols = all_k_subsets(4, 1).unwrap();
        assert!(matches!(
            inclusion_matrix(&[s(5, &[1])], &cols),
            Err(Error::GroundMismatch { .. })
        ));
        assert!(matches!(
            inclusion_matrix(&[s(4, &[1]), s(4, &[1])], &cols),
            Err(Error::Duplicate(_))
        ));
    }

    #[test]
    fn frw_examples() {
        let star = fam(4, 2, &[&[1, 2], &[1, 3], &[1, 4]]);
        assert!(frw_independence_check(&star, 1).unwrap());

        let single = fam(4, 2, &[&[1, 2]]);
        let m = generalized_incidence_matrix(&single, 0).unwrap();
        assert_eq!(m.entries(), &[vec![1]]);
        assert!(frw_independence_check(&single, 0).unwrap());

        let r = frw_report(&all_k_subsets(4, 3).unwrap(), 1).unwrap();
        assert_eq!((r.rows, r.cols, r.rank, r.independent), (4, 4, 4, true));
        assert_eq!(r.l, vec![2]);
    }

    #[test]
    fn frw_precondition_carries_l() {
        let f = fam(6, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 5, 6]]);
        match frw_report(&f, 1) {
            Err(Error::Precondition { sizes, .. }) => assert_eq!(sizes, vec![1, 2]),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(frw_report(&f, 4), Err(Error::Precondition { .. })));
        assert!(frw_independence_check(&f, 3).unwrap());
    }

    #[test]
    fn ekr_matrix_for_the_triangle() {
        let tri = fam(5, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        let d = decompose(&tri, 1).unwrap();
        let m = ekr_inclusion_matrix(&d).unwrap();
        // columns {2},{3},{4},{5}; rows {4,5}, {2}, {3}
        assert_eq!(m.entries(), &[vec![0, 0, 1, 1], vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        assert_eq!(m.rank(), 3);
        assert!(ekr_matrix_proof(&d).unwrap());
    }

    #[test]
    fn ekr_matrix_for_a_star_is_unit_rows() {
        let d = decompose(&star(6, 3, 1).unwrap(), 1).unwrap();
        let m = ekr_inclusion_matrix(&d).unwrap();
        assert!(m.entries().iter().all(|r| r.iter().filter(|&&x| x == 1).count() == 1));
        assert!(ekr_matrix_proof(&d).unwrap());
        let r = ekr_matrix_report(&d).unwrap();
        assert_eq!((r.rank, r.rows, r.cols), (10, 10, 10));
    }

    #[test]
    fn polynomial_examples() {
        let p = build_polynomial(&s(5, &[1, 4]), 5, 2, 1).unwrap();
        assert_eq!(p.to_string(), "x4");
        let p = build_polynomial(&s(5, &[2, 3]), 5, 2, 1).unwrap();
        assert_eq!(p.to_string(), "x4 + x5");
        let p = build_polynomial(&s(4, &[2, 3]), 4, 2, 1).unwrap();
        assert_eq!(p.to_string(), "x4");
        assert_eq!(p.degree, 1);
        assert!(build_polynomial(&s(4, &[2, 3]), 4, 3, 1).is_err());
        assert!(build_polynomial(&s(4, &[2, 3]), 4, 2, 5).is_err());
    }

    #[test]
    fn polynomial_evaluation() {
        let p = build_polynomial(&s(6, &[2, 3, 4]), 6, 3, 1).unwrap();
        // x5*x6 only
        assert_eq!(p.evaluate(&[7, 7, 7, 7, 2, 3]), 6);
    }

    #[test]
    fn triangle_polynomials_are_independent() {
        let tri = fam(5, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        let d = decompose(&tri, 1).unwrap();
        let polys: Vec<String> = family_polynomials(&d).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(polys, vec!["x4 + x5", "x2", "x3"]);
        assert!(polynomials_independent(&tri, 1).unwrap());
        assert!(polynomials_independent(&star(6, 2, 4).unwrap(), 4).unwrap());
    }

    #[test]
    fn coefficient_matrix_is_the_inclusion_matrix() {
        let f = fam(7, 3, &[&[1, 2, 3], &[1, 2, 4], &[2, 3, 4], &[1, 3, 4], &[2, 4, 5]]);
        for pivot in 1..=7 {
            let d = decompose(&f, pivot).unwrap();
            let inc = ekr_inclusion_matrix(&d).unwrap();
            let coeff = polynomial_coefficient_matrix(&d).unwrap();
            let inc64: Vec<Vec<i64>> = inc.entries().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
            assert_eq!(coeff, inc64, "pivot {pivot}");
        }
    }

    #[test]
    fn dump_round_trips() {
        let tri = fam(5, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        let m = ekr_inclusion_matrix(&decompose(&tri, 1).unwrap()).unwrap();
        let text = m.dump();
        assert!(text.starts_with("3 4\n0 0 1 1\n1 0 0 0\n0 1 0 0\nblock rows 1\n5 2\n4 5\nblock rows 2\n5 1\n2\n3\nblock cols 4\n"));
        assert_eq!(InclusionMatrix::parse_dump(&text).unwrap(), m);
        let tampered = text.replacen("0 0 1 1", "0 1 1 1", 1);
        assert!(InclusionMatrix::parse_dump(&tampered).is_err());
    }
}

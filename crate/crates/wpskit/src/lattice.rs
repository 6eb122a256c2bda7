//! Lattice-point machinery on simplices: bounding boxes, exact rational
//! membership, exhaustive enumeration in lexicographic order, and the
//! face-dimension function driving the cohomology sums.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polytope::SimplexPolytope;

/// Position of a point relative to a simplex: outside, or on a smallest
/// face of the given dimension (`FaceDim(n)` means strictly interior).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FacePosition {
    Outside,
    FaceDim(usize),
}

/// The `n+1` facet normals of a simplex together with the affine base
/// data needed to evaluate them.
#[derive(Debug, Clone)]
pub struct HalfSpaceSystem {
    normals: Vec<Vec<BigInt>>,
    base: Vec<BigInt>,
    first_edge: Vec<BigInt>,
}

impl HalfSpaceSystem {
    /// Build the system from the sign-corrected adjugate of the vertex
    /// difference matrix: rows `A_1..A_n` plus `AA_1 = -Σ A_r` in front.
    pub fn new(p: &SimplexPolytope) -> Result<Self> {
        let m = p.matrix();
        let det = m.det()?;
        let adj = m.adjugate()?;
        let a = if det.is_negative() {
            adj.scale(&BigInt::from(-1))
        } else {
            adj
        };
        let n = a.rows();
        let mut normals = Vec::with_capacity(n + 1);
        let mut neg_sum = vec![BigInt::zero(); n];
        for r in 0..n {
            let row = a.row(r);
            for (s, v) in neg_sum.iter_mut().zip(&row) {
                *s -= v;
            }
            normals.push(row);
        }
        normals.insert(0, neg_sum);
        let base = p.vertices()[0].clone();
        let first_edge: Vec<BigInt> = p.vertices()[1]
            .iter()
            .zip(&base)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            normals,
            base,
            first_edge,
        })
    }

    pub fn dim(&self) -> usize {
        self.base.len()
    }

    /// The `n+1` facet evaluations at a rational point; the point is in
    /// the simplex iff all are nonnegative, interior iff all positive.
    pub fn evaluations(&self, x: &[BigRational]) -> Result<Vec<BigRational>> {
        if x.len() != self.dim() {
            return Err(Error::Shape("point has wrong dimension".into()));
        }
        let rel: Vec<BigRational> = x
            .iter()
            .zip(&self.base)
            .map(|(a, b)| a - BigRational::from(b.clone()))
            .collect();
        let mut evals = Vec::with_capacity(self.normals.len());
        for (i, normal) in self.normals.iter().enumerate() {
            let mut acc = BigRational::zero();
            for (j, c) in normal.iter().enumerate() {
                let coord = if i == 0 {
                    &rel[j] - BigRational::from(self.first_edge[j].clone())
                } else {
                    rel[j].clone()
                };
                acc += coord * BigRational::from(c.clone());
            }
            evals.push(acc);
        }
        Ok(evals)
    }

    /// Integer-point evaluations, avoiding rational overhead in the
    /// enumeration loop.
    fn evaluations_int(&self, x: &[BigInt]) -> Vec<BigInt> {
        let rel: Vec<BigInt> = x.iter().zip(&self.base).map(|(a, b)| a - b).collect();
        let mut evals = Vec::with_capacity(self.normals.len());
        for (i, normal) in self.normals.iter().enumerate() {
            let mut acc = BigInt::zero();
            for (j, c) in normal.iter().enumerate() {
                if i == 0 {
                    acc += (&rel[j] - &self.first_edge[j]) * c;
                } else {
                    acc += &rel[j] * c;
                }
            }
            evals.push(acc);
        }
        evals
    }
}

/// Componentwise minima and maxima over the vertices.
pub fn bounding_box(p: &SimplexPolytope) -> (Vec<BigInt>, Vec<BigInt>) {
    vertex_bounds(p.vertices())
}

fn vertex_bounds(vertices: &[Vec<BigInt>]) -> (Vec<BigInt>, Vec<BigInt>) {
    let n = vertices[0].len();
    let mut lo = vertices[0].clone();
    let mut hi = vertices[0].clone();
    for v in &vertices[1..] {
        for j in 0..n {
            if v[j] < lo[j] {
                lo[j] = v[j].clone();
            }
            if v[j] > hi[j] {
                hi[j] = v[j].clone();
            }
        }
    }
    let _ = n;
    (lo, hi)
}

/// Divide every coordinate of every vertex by the gcd of all coordinates.
/// Accepts any nonempty vertex list (the published procedure applies this to
/// arbitrary point lists, not only simplices).
pub fn reduce_vertices(vertices: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    if vertices.is_empty() {
        return Err(Error::Invalid("empty vertex list".into()));
    }
    let g = vertices
        .iter()
        .flatten()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return Err(Error::Invalid("cannot reduce the all-zero vertex list".into()));
    }
    Ok(vertices
        .iter()
        .map(|v| v.iter().map(|c| c / &g).collect())
        .collect())
}

/// [`reduce_vertices`] specialized to simplices.
pub fn reduced_polytope(p: &SimplexPolytope) -> Result<SimplexPolytope> {
    SimplexPolytope::new(reduce_vertices(p.vertices())?)
}

pub fn contains(x: &[BigRational], p: &SimplexPolytope) -> Result<bool> {
    let hs = HalfSpaceSystem::new(p)?;
    Ok(hs.evaluations(x)?.iter().all(|e| !e.is_negative()))
}

pub fn contains_strictly(x: &[BigRational], p: &SimplexPolytope) -> Result<bool> {
    let hs = HalfSpaceSystem::new(p)?;
    Ok(hs.evaluations(x)?.iter().all(|e| e.is_positive()))
}

/// Number of integer cells in the bounding box; the enumeration cost.
pub fn box_cell_count(p: &SimplexPolytope) -> BigInt {
    let (lo, hi) = bounding_box(p);
    lo.iter()
        .zip(&hi)
        .map(|(a, b)| b - a + BigInt::one())
        .product()
}

fn enumerate_filtered(p: &SimplexPolytope, strict: bool) -> Result<Vec<Vec<BigInt>>> {
    let hs = HalfSpaceSystem::new(p)?;
    let (lo, hi) = bounding_box(p);
    let n = lo.len();
    let mut out = Vec::new();
    let mut current = lo.clone();
    // odometer over the box, leftmost coordinate most significant
    loop {
        let evals = hs.evaluations_int(&current);
        let inside = if strict {
            evals.iter().all(|e| e.is_positive())
        } else {
            evals.iter().all(|e| !e.is_negative())
        };
        if inside {
            out.push(current.clone());
        }
        let mut k = n;
        while k > 0 {
            let i = k - 1;
            if current[i] < hi[i] {
                current[i] += 1;
                for j in i + 1..n {
                    current[j] = lo[j].clone();
                }
                break;
            }
            k -= 1;
        }
        if k == 0 {
            break;
        }
    }
    Ok(out)
}

/// All lattice points of the simplex, in ascending lexicographic order.
pub fn enumerate_lattice_points(p: &SimplexPolytope) -> Result<Vec<Vec<BigInt>>> {
    enumerate_filtered(p, false)
}

/// The strictly interior lattice points, in ascending lexicographic order.
pub fn enumerate_interior_points(p: &SimplexPolytope) -> Result<Vec<Vec<BigInt>>> {
    enumerate_filtered(p, true)
}

/// Affine constraints `c·x + b >= threshold` describing the simplex,
/// restricted to a coordinate box; used by the analytic counter.
trait CountScalar: Integer + Clone + Signed {
    fn to_bigint(&self) -> BigInt;
}

impl CountScalar for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl CountScalar for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Recursively scan all but the last coordinate; the last coordinate's
/// feasible range is solved analytically from the constraints, which
/// turns the innermost (and widest) loop into one interval computation.
fn count_rec<T: CountScalar>(
    coeffs: &[Vec<T>],
    lo: &[T],
    hi: &[T],
    threshold: &T,
    depth: usize,
    sums: &mut Vec<T>,
    total: &mut BigInt,
) {
    let n = lo.len();
    if depth == n - 1 {
        // solve the constraints for the last coordinate
        let mut range_lo: Option<T> = None;
        let mut range_hi: Option<T> = None;
        for (r, row) in coeffs.iter().enumerate() {
            let c = &row[n - 1];
            let rhs = threshold.clone() - sums[r].clone();
            if c.is_zero() {
                if sums[r] < *threshold {
                    return; // prefix infeasible
                }
                continue;
            }
            if c.is_positive() {
                let bound = rhs.div_ceil(c);
                range_lo = Some(match range_lo {
                    Some(cur) => {
                        if bound > cur {
                            bound
                        } else {
                            cur
                        }
                    }
                    None => bound,
                });
            } else {
                let bound = rhs.div_floor(c);
                range_hi = Some(match range_hi {
                    Some(cur) => {
                        if bound < cur {
                            bound
                        } else {
                            cur
                        }
                    }
                    None => bound,
                });
            }
        }
        if let (Some(a), Some(b)) = (range_lo, range_hi) {
            if b >= a {
                *total += (b - a + T::one()).to_bigint();
            }
        }
        return;
    }
    let mut x = lo[depth].clone();
    let saved = sums.clone();
    for (r, row) in coeffs.iter().enumerate() {
        sums[r] = sums[r].clone() + row[depth].clone() * x.clone();
    }
    loop {
        count_rec(coeffs, lo, hi, threshold, depth + 1, sums, total);
        if x >= hi[depth] {
            break;
        }
        x = x + T::one();
        for (r, row) in coeffs.iter().enumerate() {
            sums[r] = sums[r].clone() + row[depth].clone();
        }
    }
    *sums = saved;
}

/// Exact number of lattice points of the simplex (`strict` counts only
/// the interior ones) without materializing the point list; the widest
/// coordinate direction is resolved analytically, the rest are scanned.
pub fn count_lattice_points(p: &SimplexPolytope, strict: bool) -> Result<BigInt> {
    let hs = HalfSpaceSystem::new(p)?;
    let n = hs.dim();
    // constraints as c·x + b >= threshold over integer points
    let mut coeffs: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    let mut offsets: Vec<BigInt> = Vec::with_capacity(n + 1);
    for (i, normal) in hs.normals.iter().enumerate() {
        let mut b = BigInt::zero();
        for (j, c) in normal.iter().enumerate() {
            let shift = if i == 0 {
                &hs.base[j] + &hs.first_edge[j]
            } else {
                hs.base[j].clone()
            };
            b -= c * shift;
        }
        coeffs.push(normal.clone());
        offsets.push(b);
    }
    let (lo, hi) = bounding_box(p);
    // put the widest coordinate last, where it is solved analytically
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&j| (&hi[j] - &lo[j]).clone());
    let lo_p: Vec<BigInt> = order.iter().map(|&j| lo[j].clone()).collect();
    let hi_p: Vec<BigInt> = order.iter().map(|&j| hi[j].clone()).collect();
    let coeffs_p: Vec<Vec<BigInt>> = coeffs
        .iter()
        .map(|row| order.iter().map(|&j| row[j].clone()).collect())
        .collect();
    let threshold = if strict { BigInt::one() } else { BigInt::zero() };
    let mut total = BigInt::zero();
    // use machine arithmetic when every intermediate value provably fits
    let mut fits = true;
    let limit = BigInt::from(i128::MAX >> 2);
    for (row, b) in coeffs_p.iter().zip(&offsets) {
        let mut bound = b.abs();
        for (c, (l, h)) in row.iter().zip(lo_p.iter().zip(&hi_p)) {
            bound += c.abs() * l.abs().max(h.abs());
        }
        if bound > limit {
            fits = false;
            break;
        }
    }
    if fits {
        let conv = |v: &BigInt| -> i128 { i128::try_from(v).expect("bounded above") };
        let coeffs_i: Vec<Vec<i128>> = coeffs_p
            .iter()
            .map(|row| row.iter().map(conv).collect())
            .collect();
        let lo_i: Vec<i128> = lo_p.iter().map(conv).collect();
        let hi_i: Vec<i128> = hi_p.iter().map(conv).collect();
        let mut sums: Vec<i128> = offsets.iter().map(conv).collect();
        let threshold_i = if strict { 1i128 } else { 0 };
        count_rec(&coeffs_i, &lo_i, &hi_i, &threshold_i, 0, &mut sums, &mut total);
    } else {
        let mut sums = offsets.clone();
        count_rec(&coeffs_p, &lo_p, &hi_p, &threshold, 0, &mut sums, &mut total);
    }
    Ok(total)
}

/// Dimension of the smallest face containing `x`, or `Outside`.
pub fn face_dimension(x: &[BigRational], p: &SimplexPolytope) -> Result<FacePosition> {
    let hs = HalfSpaceSystem::new(p)?;
    let evals = hs.evaluations(x)?;
    if evals.iter().any(|e| e.is_negative()) {
        return Ok(FacePosition::Outside);
    }
    let zeros = evals.iter().filter(|e| e.is_zero()).count();
    Ok(FacePosition::FaceDim(p.dim() - zeros))
}

/// `face_dimension` for integer points already known to need no rational
/// arithmetic (used by the cohomology sums).
pub fn face_dimension_int(x: &[BigInt], p: &SimplexPolytope) -> Result<FacePosition> {
    let q: Vec<BigRational> = x.iter().map(|v| BigRational::from(v.clone())).collect();
    face_dimension(&q, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::IntMatrix;

    fn rat(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from(BigInt::from(x))).collect()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bounding_box_reference_example() {
        let p = SimplexPolytope::from_i64(&[
            &[2, 3, 5],
            &[-1, 4, 6],
            &[3, 2, 5],
            &[4, 2, 8],
        ])
        .unwrap();
        let (lo, hi) = bounding_box(&p);
        assert_eq!(lo, ints(&[-1, 2, 5]));
        assert_eq!(hi, ints(&[4, 4, 8]));
    }

    #[test]
    fn bounding_box_translates() {
        let p = SimplexPolytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let (lo, hi) = bounding_box(&p);
        assert_eq!((lo, hi), (ints(&[0, 0]), ints(&[1, 1])));
        let t = ints(&[5, -2]);
        let (lo, hi) = bounding_box(&p.translated(&t).unwrap());
        assert_eq!((lo, hi), (ints(&[5, -2]), ints(&[6, -1])));
    }

    #[test]
    fn reduce_vertices_reference_example() {
        let v = vec![ints(&[4, 6, 10]), ints(&[-4, 8, 12])];
        assert_eq!(
            reduce_vertices(&v).unwrap(),
            vec![ints(&[2, 3, 5]), ints(&[-2, 4, 6])]
        );
        let w = vec![ints(&[2, 3, 5])];
        assert_eq!(reduce_vertices(&w).unwrap(), w);
        assert!(reduce_vertices(&[ints(&[0, 0])]).is_err());
    }

    #[test]
    fn reduced_polytope_undoes_scaling() {
        let p = SimplexPolytope::from_i64(&[&[0, 0], &[2, 0], &[-1, 3]]).unwrap();
        let scaled = p.scaled(&BigInt::from(7)).unwrap();
        assert_eq!(reduced_polytope(&scaled).unwrap(), p);
    }

    #[test]
    fn containment_reference_verdicts() {
        let p = SimplexPolytope::from_i64(&[
            &[0, 0, 0],
            &[2, 0, 0],
            &[0, 5, 0],
            &[0, 0, 12],
        ])
        .unwrap();
        assert!(contains(&rat(&[1, 1, 1]), &p).unwrap());
        assert!(!contains_strictly(&rat(&[0, 1, 0]), &p).unwrap());
    }

    #[test]
    fn containment_of_big_published_polytope() {
        // the polytope of [2,5,7,5,2] as published
        let p = SimplexPolytope::from_i64(&[
            &[0, 0, 0, 0],
            &[7, 0, 0, 0],
            &[-5, 10, 0, 0],
            &[-7, 0, 14, 0],
            &[0, 0, 0, 35],
        ])
        .unwrap();
        assert!(contains(&rat(&[0, 0, 0, 0]), &p).unwrap());
        assert!(!contains_strictly(&rat(&[0, 0, 0, 0]), &p).unwrap());
        assert!(contains_strictly(&rat(&[0, 1, 1, 1]), &p).unwrap());
        assert!(!contains(&rat(&[0, -1, 0, 10]), &p).unwrap());
    }

    #[test]
    fn vertices_are_contained_but_not_interior() {
        let p = SimplexPolytope::from_i64(&[&[3, 5, 1], &[8, 9, 2], &[12, 6, 4], &[4, 1, 5]])
            .unwrap();
        for v in p.vertices() {
            let x: Vec<BigRational> = v.iter().map(|c| BigRational::from(c.clone())).collect();
            assert!(contains(&x, &p).unwrap());
            assert!(!contains_strictly(&x, &p).unwrap());
        }
    }

    #[test]
    fn enumeration_reference_example() {
        let p = SimplexPolytope::from_i64(&[&[0, 0], &[0, 3], &[5, 0]]).unwrap();
        let points = enumerate_lattice_points(&p).unwrap();
        let expected: Vec<Vec<BigInt>> = [
            [0i64, 0], [0, 1], [0, 2], [0, 3], [1, 0], [1, 1], [1, 2],
            [2, 0], [2, 1], [3, 0], [3, 1], [4, 0], [5, 0],
        ]
        .iter()
        .map(|v| ints(v))
        .collect();
        assert_eq!(points, expected);

        let interior = enumerate_interior_points(&p).unwrap();
        let expected_interior: Vec<Vec<BigInt>> =
            [[1i64, 1], [1, 2], [2, 1], [3, 1]].iter().map(|v| ints(v)).collect();
        assert_eq!(interior, expected_interior);
    }

    #[test]
    fn face_dimension_reference_values() {
        let p = SimplexPolytope::from_i64(&[&[0, 0], &[0, 3], &[5, 0]]).unwrap();
        assert_eq!(
            face_dimension(&rat(&[1, 1]), &p).unwrap(),
            FacePosition::FaceDim(2)
        );
        assert_eq!(
            face_dimension(&rat(&[5, 0]), &p).unwrap(),
            FacePosition::FaceDim(0)
        );
        let edge = vec![
            BigRational::from(BigInt::one()),
            BigRational::new(BigInt::from(12), BigInt::from(5)),
        ];
        assert_eq!(face_dimension(&edge, &p).unwrap(), FacePosition::FaceDim(1));
        assert_eq!(
            face_dimension(&rat(&[12, 0]), &p).unwrap(),
            FacePosition::Outside
        );
    }

    #[test]
    fn face_dimension_counts_vertices() {
        let p = SimplexPolytope::from_i64(&[&[0, 0, 0], &[2, 0, 0], &[0, 5, 0], &[0, 0, 12]])
            .unwrap();
        let points = enumerate_lattice_points(&p).unwrap();
        let vertices = points
            .iter()
            .filter(|x| {
                face_dimension_int(x, &p).unwrap() == FacePosition::FaceDim(0)
            })
            .count();
        assert_eq!(vertices, 4);
        // interior classification agrees with the strict membership test
        for x in &points {
            let strict = {
                let q: Vec<BigRational> =
                    x.iter().map(|c| BigRational::from(c.clone())).collect();
                contains_strictly(&q, &p).unwrap()
            };
            let interior = face_dimension_int(x, &p).unwrap() == FacePosition::FaceDim(3);
            assert_eq!(strict, interior);
        }
    }

    #[test]
    fn unimodular_translation_invariance_of_counts() {
        let p = SimplexPolytope::from_i64(&[&[0, 0], &[0, 3], &[5, 0]]).unwrap();
        let u = IntMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let m2 = u.mul(&p.matrix()).unwrap();
        let image = SimplexPolytope::from_matrix(&m2)
            .unwrap()
            .translated(&ints(&[-3, 9]))
            .unwrap();
        assert_eq!(
            enumerate_lattice_points(&p).unwrap().len(),
            enumerate_lattice_points(&image).unwrap().len()
        );
        assert_eq!(
            enumerate_interior_points(&p).unwrap().len(),
            enumerate_interior_points(&image).unwrap().len()
        );
    }

    #[test]
    fn analytic_count_agrees_with_enumeration() {
        let polys = [
            SimplexPolytope::from_i64(&[&[0, 0], &[0, 3], &[5, 0]]).unwrap(),
            SimplexPolytope::from_i64(&[&[3, 5, 1], &[8, 9, 2], &[12, 6, 4], &[4, 1, 5]])
                .unwrap(),
            SimplexPolytope::from_i64(&[&[0, 0, 0], &[2, 0, 0], &[0, 5, 0], &[0, 0, 12]])
                .unwrap(),
            SimplexPolytope::from_i64(&[&[-2, 1], &[7, -3], &[1, 6]]).unwrap(),
        ];
        for p in &polys {
            assert_eq!(
                count_lattice_points(p, false).unwrap(),
                BigInt::from(enumerate_lattice_points(p).unwrap().len())
            );
            assert_eq!(
                count_lattice_points(p, true).unwrap(),
                BigInt::from(enumerate_interior_points(p).unwrap().len())
            );
        }
    }

    #[test]
    fn box_cell_count_matches_widths() {
        let p = SimplexPolytope::from_i64(&[&[0, 0], &[0, 3], &[5, 0]]).unwrap();
        assert_eq!(box_cell_count(&p), BigInt::from(24));
    }
}

use super::data::WeakHopfAlgebra;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::la::Matrix;

/// Coordinatewise direct sum. Labels get `1.`/`2.` prefixes only when the
/// two label sets collide.
pub fn direct_sum(a: &WeakHopfAlgebra, b: &WeakHopfAlgebra) -> Result<WeakHopfAlgebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().to_string(), b.field().to_string()));
    }
    let f = a.field();
    let (n, m) = (a.dim(), b.dim());
    let t = n + m;
    let mut mult = vec![f.zero(); t * t * t];
    let mut comult = vec![f.zero(); t * t * t];
    for (h, off, d) in [(a, 0, n), (b, n, m)] {
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    mult[((i + off) * t + j + off) * t + k + off] = h.algebra().c(i, j, k).clone();
                    comult[((i + off) * t + j + off) * t + k + off] = h.d(i, j, k).clone();
                }
            }
        }
    }
    let unit = a.one().iter().chain(b.one()).cloned().collect();
    let counit = a.counit_vec().iter().chain(b.counit_vec()).cloned().collect();
    let sa = a.antipode_matrix();
    let sb = b.antipode_matrix();
    let antipode = Matrix::from_fn(f, t, t, |i, j| {
        if i < n && j < n {
            sa[(i, j)].clone()
        } else if i >= n && j >= n {
            sb[(i - n, j - n)].clone()
        } else {
            f.zero()
        }
    });
    let collide = a.labels().iter().any(|l| b.labels().contains(l));
    let labels = if collide {
        a.labels().iter().map(|l| format!("1.{l}")).chain(b.labels().iter().map(|l| format!("2.{l}"))).collect()
    } else {
        a.labels().iter().chain(b.labels()).cloned().collect()
    };
    let alg = Algebra::new(f, t, mult, unit)?;
    WeakHopfAlgebra::new(alg, labels, comult, counit, antipode)
}

use serde::Serialize;

use super::dual::{dual_module, left_dual};
use super::hom::{intertwiners, is_isomorphic, IsoWitness};
use super::module::{BimoduleRep, ModuleRep, Side};
use super::tensor::{truncated_tensor, unit_object};
use super::twist::s_twist;
use crate::error::{Error, Result};
use crate::la::Matrix;
use crate::report::VerificationReport;
use crate::wha::WeakHopfAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WattsVariant {
    /// `W ⊗̄ℓ H`
    FL,
    /// `H ⊗̄ℓ W`
    FR,
    /// `V ⊗̄r H`
    GL,
    /// `H ⊗̄r V`
    GR,
}

/// The bimodules realizing `W⊗̄−`, `−⊗̄W` and their right-module analogues.
pub fn eilenberg_watts(h: &WeakHopfAlgebra, w: &ModuleRep, variant: WattsVariant) -> Result<BimoduleRep> {
    let alg = h.algebra();
    let f = h.field();
    let expected = match variant {
        WattsVariant::FL | WattsVariant::FR => Side::Left,
        WattsVariant::GL | WattsVariant::GR => Side::Right,
    };
    if w.side != expected {
        return Err(Error::InvalidData(format!("{variant:?} needs a {expected:?} module")));
    }
    let reg = ModuleRep::regular(alg, expected);
    let iw = Matrix::identity(f, w.dim);
    let (t, extra): (_, Vec<Matrix>) = match variant {
        WattsVariant::FL => (truncated_tensor(h, w, &reg)?, alg.rights().iter().map(|r| iw.kron(r)).collect()),
        WattsVariant::FR => (truncated_tensor(h, &reg, w)?, alg.rights().iter().map(|r| r.kron(&iw)).collect()),
        WattsVariant::GL => (truncated_tensor(h, w, &reg)?, alg.lefts().iter().map(|l| iw.kron(l)).collect()),
        WattsVariant::GR => (truncated_tensor(h, &reg, w)?, alg.lefts().iter().map(|l| l.kron(&iw)).collect()),
    };
    let extra = extra.iter().map(|m| t.image.restrict_operator(m)).collect::<Result<Vec<_>>>()?;
    let (left, right) = match expected {
        Side::Left => (t.module.action, extra),
        Side::Right => (extra, t.module.action),
    };
    Ok(BimoduleRep::new_unchecked(t.image.dim(), left, right))
}

/// `Hom_H(W, B)` for a left module `W`, as a right module via the right action of `B`.
pub fn hom_into_bimodule(w: &ModuleRep, b: &BimoduleRep) -> Result<ModuleRep> {
    if w.side != Side::Left {
        return Err(Error::InvalidData("expected a left module".into()));
    }
    let f = w.field();
    let hom = intertwiners(f, w.dim, b.dim, &w.action, &b.left)?;
    let basis = hom.basis();
    let d = basis.len();
    let action = b
        .right
        .iter()
        .map(|r| {
            Matrix::from_columns(f, d, &basis.iter().map(|t| hom.coords(&r.mul(t)).expect("stays in Hom")).collect::<Vec<_>>())
        })
        .collect();
    Ok(ModuleRep::new_unchecked(Side::Right, d, action))
}

#[derive(Clone, Debug, Serialize)]
pub struct ObjectInvertibility {
    pub invertible: bool,
    /// `V ⊗̄ V* ≅ unit`
    pub witness: IsoWitness,
    /// `V* ⊗̄ V ≅ unit`, recorded for comparison.
    pub other_side: bool,
    #[serde(skip)]
    pub inverse: ModuleRep,
}

/// Invertibility in `(H-Mod, ⊗̄ℓ, H_t)` or `(Mod-H, ⊗̄r, H_s)` with candidate inverse `V*`.
pub fn is_invertible_object(h: &WeakHopfAlgebra, v: &ModuleRep) -> Result<ObjectInvertibility> {
    let dual = dual_module(h, v);
    let unit = unit_object(h, v.side);
    let vd = truncated_tensor(h, v, &dual)?.module;
    let dv = truncated_tensor(h, &dual, v)?.module;
    let witness = is_isomorphic(&vd, &unit)?;
    let other_side = is_isomorphic(&dv, &unit)?.exists;
    Ok(ObjectInvertibility { invertible: witness.exists, witness, other_side, inverse: dual })
}

/// Hom-level adjunctions for left modules `W`, `V`:
/// `Hom_H(W⊗̄ℓV, H) ≅ Hom_H(W, H⊗̄ℓV*)` and `Hom_H(V, H) ≅ Hom_H(H_t, H) ⊗̄r ^S(V*)`.
pub fn check_hom_adjunction(h: &WeakHopfAlgebra, w: &ModuleRep, v: &ModuleRep) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("hom_adjunction");
    let reg = BimoduleRep::regular(h.algebra());
    let d = left_dual(h, v)?;
    r.absorb("dual.", d.report.clone());
    let wv = truncated_tensor(h, w, v)?.module;
    let lhs = hom_into_bimodule(&wv, &reg)?;
    let hv = eilenberg_watts(h, &d.module, WattsVariant::FR)?;
    let rhs = hom_into_bimodule(w, &hv)?;
    let iso = is_isomorphic(&lhs, &rhs)?;
    r.claim("tensor_hom", iso.exists, || format!("dimensions {} and {}", lhs.dim, rhs.dim));
    let hom_v = hom_into_bimodule(v, &reg)?;
    let ints = hom_into_bimodule(&unit_object(h, Side::Left), &reg)?;
    let twisted = s_twist(h, &d.module);
    let prod = truncated_tensor(h, &ints, &twisted)?.module;
    let iso = is_isomorphic(&hom_v, &prod)?;
    r.claim("dual_hom", iso.exists, || format!("dimensions {} and {}", hom_v.dim, prod.dim));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::la::Field;
    use crate::rep::bimodule::bimodule_tensor;
    use crate::rep::hom::bimodules_isomorphic;

    #[test]
    fn watts_of_units_is_regular() {
        for name in ["kc2", "sweedler", "pairgpd2", "sum:kc2,pairgpd2"] {
            let h = catalog::builtin(name, Field::Rational).unwrap();
            let reg = BimoduleRep::regular(h.algebra());
            let ht = unit_object(&h, Side::Left);
            let hs = unit_object(&h, Side::Right);
            for (m, v) in [(&ht, WattsVariant::FL), (&ht, WattsVariant::FR), (&hs, WattsVariant::GL), (&hs, WattsVariant::GR)] {
                let b = eilenberg_watts(&h, m, v).unwrap();
                b.check(h.algebra(), h.algebra()).unwrap();
                assert!(bimodules_isomorphic(&b, &reg).unwrap().exists, "{name} {v:?}");
            }
        }
    }

    #[test]
    fn fl_is_monoidal_on_regular() {
        let h = catalog::pair_groupoid(Field::Rational, 2).unwrap();
        let reg = ModuleRep::regular(h.algebra(), Side::Left);
        let ww = truncated_tensor(&h, &reg, &reg).unwrap().module;
        let lhs = eilenberg_watts(&h, &ww, WattsVariant::FL).unwrap();
        let a = eilenberg_watts(&h, &reg, WattsVariant::FL).unwrap();
        let rhs = bimodule_tensor(&a, &a).unwrap().bimodule;
        assert!(bimodules_isomorphic(&lhs, &rhs).unwrap().exists);
    }

    #[test]
    fn units_invertible_regular_not() {
        let h = catalog::kc2(Field::Rational).unwrap();
        for side in [Side::Left, Side::Right] {
            assert!(is_invertible_object(&h, &unit_object(&h, side)).unwrap().invertible);
            let reg = is_invertible_object(&h, &ModuleRep::regular(h.algebra(), side)).unwrap();
            assert!(!reg.invertible);
            assert!(!reg.other_side);
        }
    }

    #[test]
    fn adjunction_unit_case() {
        for name in ["sweedler", "pairgpd2"] {
            let h = catalog::builtin(name, Field::Rational).unwrap();
            let ht = unit_object(&h, Side::Left);
            let reg = ModuleRep::regular(h.algebra(), Side::Left);
            let r = check_hom_adjunction(&h, &reg, &ht).unwrap();
            assert!(r.passed, "{name}: {:?}", r.failed_sections());
            let r = check_hom_adjunction(&h, &ht, &reg).unwrap();
            assert!(r.passed, "{name}: {:?}", r.failed_sections());
        }
    }
}

//! The two-dimensional braided vector space `V_abe`.

use num_integer::Integer;

use crate::braided::{diagonal_profile, twist_conjugate, DiagonalProfile, MonomialBraiding, TwistPair};
use crate::cyclo::{CycloField, CycloNum, RootExpr};
use crate::error::{Error, Result};
use crate::exactla::MonomialOperator;
use crate::suzuki::verdict::{FamilyVerdict, Verdict};

#[derive(Clone, Debug, PartialEq)]
pub struct VAbeParams {
    pub a: CycloNum,
    pub b: CycloNum,
    pub e: CycloNum,
}

impl VAbeParams {
    /// All three must be nonzero and in one field.
    pub fn new(a: CycloNum, b: CycloNum, e: CycloNum) -> Result<Self> {
        for (i, x) in [&a, &b, &e].into_iter().enumerate() {
            if x.is_zero() {
                return Err(Error::Parameter(format!("parameter {} is zero", ["a", "b", "e"][i])));
            }
        }
        for x in [&b, &e] {
            if x.field() != a.field() {
                return Err(Error::FieldMismatch(a.field().order(), x.field().order()));
            }
        }
        Ok(VAbeParams { a, b, e })
    }

    /// Parameters given as root literals, moved into a common field.
    pub fn from_roots(a: &RootExpr, b: &RootExpr, e: &RootExpr) -> Result<Self> {
        let order = [a, b, e].iter().fold(1u32, |m, r| m.lcm(&r.order.max(1)));
        let f = CycloField::new(order)?;
        Self::new(f.from_root_expr(a)?, f.from_root_expr(b)?, f.from_root_expr(e)?)
    }

    pub fn field(&self) -> &CycloField {
        self.a.field()
    }

    fn embed(&self, target: &CycloField) -> Result<Self> {
        Self::new(self.a.embed(target)?, self.b.embed(target)?, self.e.embed(target)?)
    }
}

/// `c(v1 v1) = a v2 v2`, `c(v1 v2) = b v1 v2`, `c(v2 v1) = b v2 v1`, `c(v2 v2) = e v1 v1`.
pub fn v_abe(p: &VAbeParams) -> Result<MonomialBraiding> {
    MonomialBraiding::from_fn(p.field(), 2, |i, j| {
        Ok(match (i, j) {
            (0, 0) => (1, 1, p.a.clone()),
            (0, 1) => (0, 1, p.b.clone()),
            (1, 0) => (1, 0, p.b.clone()),
            _ => (0, 0, p.e.clone()),
        })
    })
}

#[derive(Clone, Debug)]
pub struct VAbeDiagonal {
    /// `V_{r b r}` with `r = sqrt(ae)`, in the basis `w1 = t v1`, `w2 = v2`.
    pub iso_form: MonomialBraiding,
    /// The swap-twisted form: `q11 = q22 = b`, `q12 = q21 = r`.
    pub diagonal: MonomialBraiding,
    pub sqrt_ae: CycloNum,
    /// `t`, a fourth root of `e / a`.
    pub scale: CycloNum,
    pub profile: DiagonalProfile,
}

/// Exponent of `x` as a power of `z_L` for some `L`, with the sign absorbed.
fn as_pure_power(x: &CycloNum) -> Result<(u32, i64)> {
    let r = x.as_root().ok_or_else(|| {
        Error::Parameter(
            "parameters must be roots of unity given as powers of the field generator; \
             enlarge the field so that they are"
                .into(),
        )
    })?;
    let r = r.canonical();
    let order = r.order.max(1);
    if r.sign >= 0 {
        return Ok((order, r.exp));
    }
    let l = order.lcm(&2);
    Ok((l, r.exp * (l / order) as i64 + (l / 2) as i64))
}

/// Rescales `v1` by a fourth root of `e/a` and then applies the swap twist.
pub fn v_abe_diagonalize(p: &VAbeParams) -> Result<VAbeDiagonal> {
    let ratio = crate::cyclo::arith(crate::cyclo::ArithOp::Div, &p.e, &p.a)?;
    let (l, k) = as_pure_power(&ratio)?;
    let target = CycloField::new(p.field().order().lcm(&(4 * l)))?;
    let q = p.embed(&target)?;
    let t = target.from_root_expr(&RootExpr::new(4 * l, k, 1))?;

    let c = v_abe(&q)?;
    let scale = MonomialOperator::new(&target, vec![0, 1], vec![t.clone(), target.one()])?;
    let iso_form = twist_conjugate(&c, &TwistPair::new(scale.clone(), scale)?)?.tilde;
    let sqrt_ae = iso_form.coeff(0, 0).clone();
    if iso_form.coeff(1, 1) != &sqrt_ae {
        return Err(Error::NotABraiding("rescaled form is not symmetric".into()));
    }
    let swap = MonomialOperator::permutation(&target, vec![1, 0])?;
    let id = MonomialOperator::identity(&target, 2);
    let diagonal = twist_conjugate(&iso_form, &TwistPair::new(swap, id)?)?.tilde;
    let profile = diagonal_profile(&diagonal)
        .ok_or_else(|| Error::NotABraiding("swap twist did not give a diagonal braiding".into()))?;
    Ok(VAbeDiagonal {
        iso_form,
        diagonal,
        sqrt_ae,
        scale: t,
        profile,
    })
}

/// The four branches, checked in order: 27, `4m`, `m^2`, infinite.
pub fn v_abe_verdict(p: &VAbeParams) -> FamilyVerdict {
    let f = p.field();
    let ae = &p.a * &p.e;
    let b = &p.b;
    let b2 = b * b;
    let minus_one = f.from_int(-1);
    let verdict = if ae == b2 && b.is_primitive_root(3) {
        Verdict::finite(27, "Cartan A2")
    } else if *b == minus_one && ae.root_order().is_some() {
        let m = ae.root_order().unwrap();
        Verdict::finite(4 * m as u64, if m == 1 { "Cartan A1xA1" } else { "super A2" })
    } else if ae.is_one() && b.root_order().is_some_and(|m| m >= 2) {
        let m = b.root_order().unwrap() as u64;
        Verdict::finite(m * m, "Cartan A1xA1")
    } else {
        Verdict::infinite("none of the finite branches applies")
    };
    FamilyVerdict {
        family: "Vabe".into(),
        params: crate::json::vabe_params_to_json(p),
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::DiagonalType;

    fn params(order: u32, a: i64, b: i64, e: i64) -> VAbeParams {
        let f = CycloField::new(order).unwrap();
        VAbeParams::new(f.root_power(a), f.root_power(b), f.root_power(e)).unwrap()
    }

    #[test]
    fn braiding_shape() {
        let p = params(1, 0, 0, 0);
        let c = v_abe(&p).unwrap();
        assert_eq!(c.apply(1, 1), (0, 0, &p.e));
        assert_eq!(c.apply(0, 1), (0, 1, &p.b));
        for (a, b, e) in [(1, 2, 5), (3, 0, 7), (11, 4, 4)] {
            assert!(v_abe(&params(12, a, b, e)).unwrap().check_braid_equation());
        }
    }

    #[test]
    fn zero_parameter_rejected() {
        let f = CycloField::new(3).unwrap();
        assert!(VAbeParams::new(f.zero(), f.one(), f.one()).is_err());
    }

    #[test]
    fn diagonal_profiles() {
        // (1, z3, 1): A1 x A1
        let d = v_abe_diagonalize(&params(3, 0, 1, 0)).unwrap();
        let dy = d.profile.dynkin.clone().unwrap();
        assert!(dy.q12q21.is_one());
        assert_eq!(dy.classify(), Some(DiagonalType::A1xA1 { m1: 3, m2: 3 }));
        // (z3^2, z3, 1): Cartan A2
        let d = v_abe_diagonalize(&params(3, 2, 1, 0)).unwrap();
        let dy = d.profile.dynkin.clone().unwrap();
        assert_eq!(dy.classify(), Some(DiagonalType::CartanA2 { n: 3 }));
        // (1, -1, 1): (-1, 1, -1)
        let f = CycloField::new(1).unwrap();
        let p = VAbeParams::new(f.one(), f.from_int(-1), f.one()).unwrap();
        let dy = v_abe_diagonalize(&p).unwrap().profile.dynkin.unwrap();
        assert_eq!(dy.q11, dy.q11.field().from_int(-1));
        assert!(dy.q12q21.is_one());
        assert_eq!(dy.q22, dy.q22.field().from_int(-1));
    }

    #[test]
    fn scale_is_a_fourth_root() {
        let p = params(5, 1, 2, 4);
        let d = v_abe_diagonalize(&p).unwrap();
        let ratio = (&p.e * &p.a.inv().unwrap()).embed(d.scale.field()).unwrap();
        assert_eq!(d.scale.pow(4).unwrap(), ratio);
        let ae = (&p.a * &p.e).embed(d.scale.field()).unwrap();
        assert_eq!(&d.sqrt_ae * &d.sqrt_ae, ae);
    }

    #[test]
    fn non_root_parameters_rejected() {
        let f = CycloField::new(1).unwrap();
        let p = VAbeParams::new(f.from_int(2), f.one(), f.one()).unwrap();
        assert!(matches!(v_abe_diagonalize(&p), Err(Error::Parameter(_))));
    }

    #[test]
    fn verdict_examples() {
        // b = -1, ae = z5
        let f = CycloField::new(10).unwrap();
        let p = VAbeParams::new(f.root_power(2), f.from_int(-1), f.one()).unwrap();
        assert_eq!(v_abe_verdict(&p).verdict, Verdict::finite(20, "super A2"));
        // ae = 1, b = z7
        assert_eq!(v_abe_verdict(&params(7, 0, 1, 0)).verdict, Verdict::finite(49, "Cartan A1xA1"));
        // b = z5, ae = z5^3
        assert!(matches!(v_abe_verdict(&params(5, 3, 1, 0)).verdict, Verdict::Infinite { .. }));
        assert_eq!(v_abe_verdict(&params(3, 2, 1, 0)).verdict, Verdict::finite(27, "Cartan A2"));
    }
}

//! Suites for single-matrix identities: minimal polynomials, products,
//! special sums, additive rules, Schur complements and the `Y` matrix.

use rand::Rng;

use super::gen::{self, CaseRng};
use super::{nilpotency_index, oracle_drazin, Case, Suite};
use crate::antitri::{y_drazin_power, y_matrix, y_matrix_drazin_with, y_power};
use crate::error::Result;
use crate::exactmat::{inverse, is_invertible, null_space, rank, schur_complement, schur_one_inverse, Matrix};
use crate::geninv::{
    additive_drazin_oneside, additive_drazin_orthogonal, cline_drazin, drazin, drazin_index,
    drazin_via_special_sum, hartwig_sum, is_one_inverse, one_inverse, one_inverse_family,
    special_sum, split_one_inverse, verify_drazin,
};
use crate::polyring::{min_poly, poly_gcd_lcm, split_lambda_power, Polynomial};

pub(super) fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "min-poly", description: "minimal polynomial annihilates, is minimal, and its lambda power is the index", run: min_poly_suite },
        Suite { name: "minpoly-product", description: "psi_AB and psi_BA differ by at most one factor lambda", run: minpoly_product },
        Suite { name: "shifted-product", description: "psi_{I-AB} and psi_{I-BA} differ by at most one factor (lambda-1); equal indices", run: shifted_product },
        Suite { name: "drazin-triple", description: "Drazin inverse satisfies the three equations and matches the A^k (A^{2k+1})^- A^k oracle", run: drazin_triple },
        Suite { name: "special-sum-index", description: "singular A: i(A^2A^- + I - AA^-), i(A + I - AA^-), i(A^-A^2 + I - A^-A), i(A + I - A^-A) all equal i(A) - 1", run: special_sum_index },
        Suite { name: "special-sum-minpoly", description: "psi_A = lambda psi_{A^2A^-} and psi of the special sum is lcm(psi_A / lambda, lambda - 1)", run: special_sum_minpoly },
        Suite { name: "cline", description: "(AB)^D = A((BA)^D)^2 B and |i(AB) - i(BA)| <= 1", run: cline },
        Suite { name: "commuting", description: "a polynomial in A commutes with A^D and its Drazin inverse commutes with A and A^D", run: commuting },
        Suite { name: "power-identity", description: "(A^2A^-)^l = A^{l+1}A^-", run: power_identity },
        Suite { name: "nilpotent-reduction", description: "nonzero nilpotent N: N^2N^- is nilpotent of index i(N) - 1", run: nilpotent_reduction },
        Suite { name: "orthogonal-sum", description: "XY = YX = 0: (X+Y)^D = X^D + Y^D and i(X+Y) = max(i(X), i(Y)) when singular", run: orthogonal_sum },
        Suite { name: "one-side-sum", description: "XY = 0: the Hartwig sum gives (X+Y)^D for every admissible k", run: one_side_sum },
        Suite { name: "special-sum-powers", description: "(A^2A^- + I - AA^-)^l A A^- = A^{l+1}A^- and ((S)^D)^2 A = A^D", run: special_sum_powers },
        Suite { name: "schur-one-inverse", description: "Schur-complement {1}-inverse N satisfies MNM = M; inverse when Z is", run: schur },
        Suite { name: "drazin-one-inverse-product", description: "(W^D W W^-)^n = (W^D)^n W W^- and W^D W W^- W^D = (W^D)^2; the printed (W^D)^{n-1} W^- is logged", run: drazin_one_inverse_product },
        Suite { name: "swap-block", description: "Y = [[0, WW^-], [W, 0]]: Y^D = [[0, W^D W W^-], [W W^D, 0]] and i(Y) = 2i(W) - 1", run: swap_block },
        Suite { name: "swap-block-powers", description: "closed forms of Y^n and (Y^D)^n", run: swap_block_powers },
        Suite { name: "one-inverse-family", description: "A^- + Z - A^-AZAA^- is a {1}-inverse for every Z", run: family },
        Suite { name: "split-one-inverse", description: "core-nilpotent {1}-inverse is a {1}-inverse and gives the special-sum Drazin inverse", run: split },
    ]
}

fn show(m: &Matrix) -> String {
    m.to_json().to_string()
}

fn lambda() -> Polynomial {
    Polynomial::lambda_pow(1)
}

/// `p = q`, `p = f q` or `q = f p`.
fn differ_by_factor(p: &Polynomial, q: &Polynomial, f: &Polynomial) -> bool {
    p == q || *p == f * q || *q == f * p
}

/// Pair `A` (`p x q`), `B` (`q x p`), sometimes sharing a nilpotent factor so
/// that products of higher index appear.
fn product_pair(rng: &mut CaseRng) -> (Matrix, Matrix) {
    let p = gen::dim(rng, 1, 5);
    let q = gen::dim(rng, 1, 5);
    let mut a = gen::sparse(rng, p, q, 0.6);
    let b = gen::sparse(rng, q, p, 0.6);
    if gen::coin(rng, 0.4) {
        a = &gen::nilpotent(rng, p) * &a;
    }
    (a, b)
}

fn min_poly_suite(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 6);
    let a = gen::square(rng, n);
    let psi = min_poly(&a)?;
    case.check("annihilates", psi.eval_matrix(&a)?.is_zero(), || show(&a));
    case.check("monic", psi.is_monic(), || psi.to_string());
    let d = psi.degree().unwrap_or(0);
    let powers: Vec<Matrix> = (0..d)
        .map(|k| Matrix::from_vec(1, n * n, a.p(k).vectorize().to_vec()).expect("row"))
        .collect();
    let refs: Vec<&Matrix> = powers.iter().collect();
    let stacked = Matrix::vstack(&refs)?;
    case.check("lower-powers-independent", rank(&stacked) == d, || show(&a));
    let (k, _) = split_lambda_power(&psi)?;
    case.check("lambda-power-is-index", k == drazin_index(&a)?, || show(&a));
    Ok(())
}

fn minpoly_product(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let (a, b) = product_pair(rng);
    let pab = min_poly(&(&a * &b))?;
    let pba = min_poly(&(&b * &a))?;
    case.check("lambda-relation", differ_by_factor(&pab, &pba, &lambda()), || {
        format!("A={} B={} psi_AB={pab} psi_BA={pba}", show(&a), show(&b))
    });
    Ok(())
}

fn shifted_product(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let (a, b) = product_pair(rng);
    let k = &Matrix::identity(a.rows()) - &(&a * &b);
    let w = &Matrix::identity(b.rows()) - &(&b * &a);
    let pk = min_poly(&k)?;
    let pw = min_poly(&w)?;
    let shift = Polynomial::from_ints(&[-1, 1]);
    case.check("shift-relation", differ_by_factor(&pk, &pw, &shift), || {
        format!("A={} B={} psi_K={pk} psi_W={pw}", show(&a), show(&b))
    });
    case.check("equal-index", drazin_index(&k)? == drazin_index(&w)?, || {
        format!("A={} B={}", show(&a), show(&b))
    });
    Ok(())
}

fn drazin_triple(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 6);
    let a = gen::square(rng, n);
    let d = drazin(&a)?;
    case.check("three-equations", verify_drazin(&a, &d.inverse, d.index), || show(&a));
    case.check("oracle-agrees", d.inverse == oracle_drazin(&a), || show(&a));
    case.check("index-from-min-poly", split_lambda_power(&min_poly(&a)?)?.0 == d.index, || show(&a));
    if !is_invertible(&a) {
        for _ in 0..3 {
            let am = gen::one_inverse_of(rng, &a);
            case.check("special-sum-route", drazin_via_special_sum(&a, &am)? == d.inverse, || {
                format!("A={} A-={}", show(&a), show(&am))
            });
        }
    }
    Ok(())
}

fn special_sum_index(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 6);
    let a = gen::singular(rng, n);
    let ia = drazin_index(&a)?;
    let id = Matrix::identity(n);
    let mut first = None;
    let mut invariant = true;
    for _ in 0..3 {
        let am = gen::one_inverse_of(rng, &a);
        let aam = &a * &am;
        let ama = &am * &a;
        let forms = [
            special_sum(&a, &am)?,
            &(&a + &id) - &aam,
            &(&(&ama * &a) + &id) - &ama,
            &(&a + &id) - &ama,
        ];
        let indices = forms.iter().map(drazin_index).collect::<Result<Vec<_>>>()?;
        case.check("four-forms-equal-index-minus-one", indices.iter().all(|&i| i + 1 == ia), || {
            format!("A={} A-={} i(A)={ia} got {indices:?}", show(&a), show(&am))
        });
        invariant &= *first.get_or_insert(indices.clone()) == indices;
    }
    case.check("invariant-over-family", invariant, || show(&a));
    Ok(())
}

fn special_sum_minpoly(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 5);
    let a = gen::singular(rng, n);
    let psi = min_poly(&a)?;
    let reduced = psi.div_rem(&lambda())?.0;
    let (_, expected) = poly_gcd_lcm(&reduced, &Polynomial::from_ints(&[-1, 1]))?;
    for _ in 0..3 {
        let am = gen::one_inverse_of(rng, &a);
        let a2am = &(&a * &a) * &am;
        let p2 = min_poly(&a2am)?;
        case.check("psi-a-is-lambda-times", psi == &lambda() * &p2, || {
            format!("A={} A-={} psi_A={psi} psi_A2A-={p2}", show(&a), show(&am))
        });
        // With i(A) = 1 the nilpotent block of A^2A^- is a zero block of
        // positive size, so the factor lambda survives.
        let index_one = split_lambda_power(&psi)?.0 == 1;
        let corrected = if index_one { psi == p2 } else { psi == &lambda() * &p2 };
        case.log("psi-a-corrected-for-index-one", corrected, || {
            format!("A={} A-={}", show(&a), show(&am))
        });
        let ps = min_poly(&special_sum(&a, &am)?)?;
        case.check("special-sum-lcm", ps == expected, || {
            format!("A={} A-={} got {ps} expected {expected}", show(&a), show(&am))
        });
    }
    Ok(())
}

fn cline(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let (a, b) = product_pair(rng);
    let r = cline_drazin(&a, &b)?;
    case.check("formula", r.inverse == oracle_drazin(&(&a * &b)), || {
        format!("A={} B={}", show(&a), show(&b))
    });
    case.check("index-gap", r.index_ab.abs_diff(r.index_ba) <= 1, || {
        format!("A={} B={} i(AB)={} i(BA)={}", show(&a), show(&b), r.index_ab, r.index_ba)
    });
    Ok(())
}

fn commuting(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 5);
    let a = gen::square(rng, n);
    let mut b = Matrix::zeros(n, n);
    for k in 0..4 {
        let c = crate::exactmat::int(gen::entry(rng));
        b = &b + &a.p(k).scale(&c);
    }
    let ad = drazin(&a)?.inverse;
    let bd = drazin(&b)?.inverse;
    case.check("b-commutes-with-ad", &b * &ad == &ad * &b, || show(&a));
    case.check("a-commutes-with-bd", &a * &bd == &bd * &a, || show(&a));
    case.check("drazin-inverses-commute", &ad * &bd == &bd * &ad, || show(&a));
    Ok(())
}

fn power_identity(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 6);
    let a = gen::square(rng, n);
    let am = gen::one_inverse_of(rng, &a);
    let base = &(&a * &a) * &am;
    let mut ok = true;
    for l in 1..=6 {
        ok &= base.p(l) == &a.p(l + 1) * &am;
    }
    case.check("power-identity", ok, || format!("A={} A-={}", show(&a), show(&am)));
    Ok(())
}

fn nilpotent_reduction(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 2, 6);
    let mut nil = gen::nilpotent(rng, n);
    if nil.is_zero() {
        nil[(0, n - 1)] = crate::exactmat::int(1);
    }
    let k = nilpotency_index(&nil).expect("nilpotent");
    let nm = gen::one_inverse_of(rng, &nil);
    let red = &(&nil * &nil) * &nm;
    case.check("index-drops", nilpotency_index(&red) == Some(k - 1), || {
        format!("N={} N-={}", show(&nil), show(&nm))
    });
    Ok(())
}

/// `X = V diag(X1, 0) V^{-1}` and `Y = V diag(0, Y1) V^{-1}`.
fn orthogonal_pair(rng: &mut CaseRng) -> (Matrix, Matrix) {
    let p = gen::dim(rng, 1, 3);
    let q = gen::dim(rng, 1, 3);
    let x1 = gen::square(rng, p);
    let y1 = gen::square(rng, q);
    let v = gen::unimodular(rng, p + q);
    let vi = inverse(&v).expect("unimodular");
    let x = &(&v * &Matrix::diag_blocks(&[&x1, &Matrix::zeros(q, q)])) * &vi;
    let y = &(&v * &Matrix::diag_blocks(&[&Matrix::zeros(p, p), &y1])) * &vi;
    (x, y)
}

fn orthogonal_sum(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let (x, y) = orthogonal_pair(rng);
    let r = additive_drazin_orthogonal(&x, &y)?;
    let sum = &x + &y;
    case.check("sum-of-inverses", r.inverse == oracle_drazin(&sum), || {
        format!("X={} Y={}", show(&x), show(&y))
    });
    if !is_invertible(&sum) {
        let expected = drazin_index(&x)?.max(drazin_index(&y)?);
        case.check("index-is-max", r.index == expected, || {
            format!("X={} Y={} got {} expected {expected}", show(&x), show(&y), r.index)
        });
    }
    Ok(())
}

fn one_side_sum(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 2, 6);
    let x = gen::singular(rng, n);
    let y = if gen::coin(rng, 0.5) {
        gen::from_null_space(rng, &x, n)
    } else {
        // Y = K S L with K spanning null(X) and LK = I, so Y inherits the
        // index structure of an arbitrary square S.
        let k = null_space(&x);
        let d = k.cols();
        let kt = k.transpose();
        let l = &inverse(&(&kt * &k))? * &kt;
        &(&k * &gen::square(rng, d)) * &l
    };
    let expected = oracle_drazin(&(&x + &y));
    let d = additive_drazin_oneside(&x, &y)?;
    case.check("hartwig-formula", d == expected, || format!("X={} Y={}", show(&x), show(&y)));
    let (ix, iy) = (drazin_index(&x)?, drazin_index(&y)?);
    let mut ok = true;
    for k in ix.max(iy)..=ix + iy {
        ok &= hartwig_sum(&x, &y, k)? == expected;
    }
    case.check("any-admissible-k", ok, || format!("X={} Y={}", show(&x), show(&y)));
    Ok(())
}

fn special_sum_powers(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 6);
    let a = gen::square(rng, n);
    let am = gen::one_inverse_of(rng, &a);
    let s = special_sum(&a, &am)?;
    let aam = &a * &am;
    let mut ok = true;
    for l in 1..=5 {
        ok &= &s.p(l) * &aam == &a.p(l + 1) * &am;
    }
    case.check("power-identity", ok, || format!("A={} A-={}", show(&a), show(&am)));
    let sd = drazin(&s)?.inverse;
    case.check("drazin-through-sum", &sd.p(2) * &a == oracle_drazin(&a), || {
        format!("A={} A-={}", show(&a), show(&am))
    });
    Ok(())
}

fn schur(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let p = gen::dim(rng, 1, 4);
    let q = gen::dim(rng, 1, 4);
    let a = gen::invertible(rng, p);
    let b = gen::matrix(rng, p, q);
    let c = gen::matrix(rng, q, p);
    let ai = inverse(&a)?;
    let d = if gen::coin(rng, 0.6) {
        &(&(&c * &ai) * &b) + &gen::singular(rng, q)
    } else {
        gen::matrix(rng, q, q)
    };
    let z = schur_complement(&a, &b, &c, &d)?;
    let zm = gen::one_inverse_of(rng, &z);
    let m = Matrix::block2(&a, &b, &c, &d)?;
    let nn = schur_one_inverse(&a, &b, &c, &d, &zm)?;
    case.check("mnm-equals-m", &(&m * &nn) * &m == m, || show(&m));
    case.check("invertibility-matches", is_invertible(&z) == is_invertible(&m), || show(&m));
    if is_invertible(&z) {
        case.check("inverse-when-z-invertible", Some(nn) == inverse(&m).ok(), || show(&m));
    }
    Ok(())
}

fn drazin_one_inverse_product(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 5);
    let w = gen::square(rng, n);
    let wm = gen::one_inverse_of(rng, &w);
    let wd = drazin(&w)?.inverse;
    let wwm = &w * &wm;
    let t = &wd * &wwm;
    let mut corrected = true;
    let mut literal = true;
    for k in 1..=5 {
        let tk = t.p(k);
        corrected &= tk == &wd.p(k) * &wwm;
        literal &= tk == &wd.p(k - 1) * &wm;
    }
    let ctx = || format!("W={} W-={}", show(&w), show(&wm));
    case.check("corrected-power", corrected, ctx);
    case.check("absorbs-drazin-inverse", &t * &wd == wd.p(2), ctx);
    case.log("literal-statement", literal, ctx);
    Ok(())
}

fn swap_block(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 5);
    let w = gen::singular(rng, n);
    let wm = gen::one_inverse_of(rng, &w);
    let r = y_matrix_drazin_with(&w, &wm)?;
    let y = y_matrix(&w, &wm)?;
    case.check("closed-form", r.inverse == oracle_drazin(&y), || {
        format!("W={} W-={}", show(&w), show(&wm))
    });
    case.check("index", drazin_index(&y)? == 2 * drazin_index(&w)? - 1, || {
        format!("W={} W-={}", show(&w), show(&wm))
    });
    Ok(())
}

fn swap_block_powers(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 5);
    let w = gen::singular(rng, n);
    let wm = gen::one_inverse_of(rng, &w);
    let y = y_matrix(&w, &wm)?;
    let yd = oracle_drazin(&y);
    let wd = drazin(&w)?.inverse;
    let wwm = &w * &wm;
    let z = Matrix::zeros(n, n);
    let (mut pow_ok, mut dpow_ok, mut lit_even, mut lit_odd) = (true, true, true, true);
    for k in 1..=6 {
        pow_ok &= y_power(&w, &wm, k)? == y.p(k);
        let ydk = yd.p(k);
        dpow_ok &= y_drazin_power(&w, &wm, k)? == ydk;
        let h = k / 2;
        if k % 2 == 0 {
            // As displayed: Y^{2l} = diag(W^l, W^{l+1}).
            lit_even &= Matrix::diag_blocks(&[&w.p(h), &w.p(h + 1)]) == y.p(k);
        } else {
            // As displayed: (Y^D)^{2l+1} = [[0, (W^D)^{l+1} W W^-], [(W^D)^{l+1}, 0]].
            let p = wd.p(h + 1);
            lit_odd &= Matrix::block2(&z, &(&p * &wwm), &p, &z)? == ydk;
        }
    }
    let ctx = || format!("W={} W-={}", show(&w), show(&wm));
    case.check("powers", pow_ok, ctx);
    case.check("drazin-powers", dpow_ok, ctx);
    case.log("literal-even-powers", lit_even, ctx);
    case.log("literal-odd-drazin-powers", lit_odd, ctx);
    Ok(())
}

fn family(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let p = gen::dim(rng, 1, 6);
    let q = gen::dim(rng, 1, 6);
    let density = rng.random_range(0.2..0.9);
    let a = gen::sparse(rng, p, q, density);
    let am = one_inverse(&a);
    case.check("canonical", is_one_inverse(&a, &am), || show(&a));
    let z = gen::matrix(rng, q, p);
    let x = one_inverse_family(&a, &am, &z)?;
    case.check("member", is_one_inverse(&a, &x), || format!("A={} Z={}", show(&a), show(&z)));
    // Every {1}-inverse is reached: X itself is the member for Z = X.
    case.check("surjective", one_inverse_family(&a, &am, &x)? == x, || show(&a));
    Ok(())
}

fn split(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 6);
    let a = gen::square(rng, n);
    let x = split_one_inverse(&a)?;
    case.check("is-one-inverse", is_one_inverse(&a, &x), || show(&a));
    case.check("special-sum-route", drazin_via_special_sum(&a, &x)? == oracle_drazin(&a), || show(&a));
    let ia = drazin_index(&a)?;
    case.check("special-sum-index", drazin_index(&special_sum(&a, &x)?)? == ia.saturating_sub(1), || show(&a));
    Ok(())
}

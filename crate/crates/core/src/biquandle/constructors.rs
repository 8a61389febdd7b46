use super::{Carrier, FiniteBiquandle};
use crate::error::{Error, Result};
use crate::modular::{bilinear_eval, enumerate_module, FormMatrix, ModVector, Modulus};

/// The biquandle on `N` labels whose four operations all return their first argument.
pub fn trivial_biquandle(size: usize) -> FiniteBiquandle {
    let id: Vec<u32> = (0..size)
        .flat_map(|a| std::iter::repeat_n(a as u32, size))
        .collect();
    FiniteBiquandle::from_flat(
        Carrier::Labels(size),
        [id.clone(), id.clone(), id.clone(), id],
    )
}

/// Alexander biquandle on `Z_n`:
/// `a^b = ta + (1 - st)b`, `a^{b-bar} = t^-1 a + (1 - s^-1 t^-1)b`,
/// `a_b = sa`, `a_{b-bar} = s^-1 a`.
///
/// The carrier is ordered `1, 2, ..., n-1, 0`, so element `x_k` is the residue `k`.
pub fn alexander_biquandle(n: u32, s: u32, t: u32) -> Result<FiniteBiquandle> {
    let zn = Modulus::new(n)?;
    let (s, t) = (s % n, t % n);
    let s_inv = zn.inv(s)?;
    let t_inv = zn.inv(t)?;
    let up_b = zn.sub(1, zn.mul(s, t));
    let upbar_b = zn.sub(1, zn.mul(s_inv, t_inv));

    let position = |v: u32| {
        if v == 0 {
            n as usize - 1
        } else {
            v as usize - 1
        }
    };
    let residues: Vec<u32> = (1..=n).map(|k| k % n).collect();
    let size = n as usize;
    let mut tables: [Vec<u32>; 4] = Default::default();
    for t in tables.iter_mut() {
        t.reserve(size * size);
    }
    for &a in &residues {
        for &b in &residues {
            let up = zn.add(zn.mul(t, a), zn.mul(up_b, b));
            let upbar = zn.add(zn.mul(t_inv, a), zn.mul(upbar_b, b));
            let low = zn.mul(s, a);
            let lowbar = zn.mul(s_inv, a);
            for (table, v) in tables.iter_mut().zip([up, upbar, low, lowbar]) {
                table.push(position(v) as u32);
            }
        }
    }
    let elements = residues
        .iter()
        .map(|&r| ModVector::new(zn, &[r as i64]))
        .collect::<Result<Vec<_>>>()?;
    Ok(FiniteBiquandle::from_flat(
        Carrier::Module {
            modulus: zn,
            dim: 1,
            elements,
        },
        tables,
    ))
}

/// Symplectic quandle on `(Z_n)^m`: `x^y = x + f(x,y)y`, `x^{y-bar} = x - f(x,y)y`,
/// trivial lower operations. `A` must be antisymmetric with zero diagonal.
pub fn symplectic_quandle(form: &FormMatrix) -> Result<FiniteBiquandle> {
    if !form.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    let (zn, m) = (form.modulus(), form.dim());
    let elements = enumerate_module(zn, m)?;
    let size = elements.len();
    let mut up = Vec::with_capacity(size * size);
    let mut upbar = Vec::with_capacity(size * size);
    for x in &elements {
        for y in &elements {
            let f = bilinear_eval(form, x, y)?;
            up.push(x.add(&y.scale(f))?.index() as u32);
            upbar.push(x.add(&y.scale(zn.neg(f)))?.index() as u32);
        }
    }
    let id: Vec<u32> = (0..size)
        .flat_map(|a| std::iter::repeat_n(a as u32, size))
        .collect();
    Ok(FiniteBiquandle::from_flat(
        Carrier::Module {
            modulus: zn,
            dim: m,
            elements,
        },
        [up, upbar, id.clone(), id],
    ))
}

/// `omega = -alpha^-2 beta^-2 - alpha^-1 beta + alpha^-2 (mod n)`, the scalar with `f' = omega f`.
pub fn omega(alpha: u32, beta: u32, n: u32) -> Result<u32> {
    let zn = Modulus::new(n)?;
    let ai = zn.inv(alpha % n)?;
    let bi = zn.inv(beta % n)?;
    let ai2 = zn.mul(ai, ai);
    let bi2 = zn.mul(bi, bi);
    let term1 = zn.neg(zn.mul(ai2, bi2));
    let term2 = zn.neg(zn.mul(ai, beta % n));
    Ok(zn.add(zn.add(term1, term2), ai2))
}

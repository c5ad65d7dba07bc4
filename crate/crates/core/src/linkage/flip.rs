use crate::algebra::RotationQuaternion;
use crate::error::{Error, Result};

/// Bennett flip: the pair `(k1, k2)` with `(t - h1)(t - h2) = (t - k1)(t - k2)`,
/// `k2 = -(conj(h1) - h2)⁻¹ (h1 h2 - h1 conj(h1))` and `k1 = h1 + h2 - k2`.
pub fn bflip(h1: &RotationQuaternion, h2: &RotationQuaternion) -> Result<(RotationQuaternion, RotationQuaternion)> {
    let (a, b) = (h1.value(), h2.value());
    let ac = a.conj();
    if &ac == b {
        return Err(Error::FlipUndefined(format!("conj({a}) equals {b}")));
    }
    let inv = (&ac - b).inverse().map_err(|_| Error::FlipUndefined(format!("conj({a}) - ({b}) is not invertible")))?;
    let k2 = -(&inv * &(&(a * b) - &(a * &ac)));
    let k1 = &(a + b) - &k2;
    let wrap = |v| RotationQuaternion::new(v).map_err(|e| Error::FlipUndefined(e.to_string()));
    Ok((wrap(k1)?, wrap(k2)?))
}

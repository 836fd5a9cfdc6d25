use crate::error::RainbowError;

/// Rainbow connection number of the cycle on `n >= 4` vertices: `ceil(n/2)`.
///
/// The closed form is not applied to `n = 3`, where it would give 2 while
/// the triangle is complete and needs a single color.
pub fn formula_rc_cycle(n: usize) -> Result<usize, RainbowError> {
    if n < 4 {
        return Err(RainbowError::FormulaDomain { n, min: 4 });
    }
    Ok(n.div_ceil(2))
}

/// Rainbow connection number of the fan `P_n` joined with `K_1`.
pub fn formula_rc_fan(n: usize) -> Result<usize, RainbowError> {
    match n {
        0 | 1 => Err(RainbowError::FormulaDomain { n, min: 2 }),
        2 => Ok(1),
        3..=6 => Ok(2),
        _ => Ok(3),
    }
}

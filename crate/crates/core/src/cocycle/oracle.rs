use super::Cocycle;
use crate::error::{HopfError, Result};
use crate::exactarith::{rank_cyclo, CycloNum, RootExp};

/// Largest group order accepted by [`twisted_algebra_simple_oracle`].
pub const ORACLE_ORDER_LIMIT: usize = 16;

/// Whether the twisted group algebra `k_α G` has one-dimensional center,
/// computed from its structure constants `u_s u_t = α(s,t) u_{st}` by
/// exact linear algebra over `Q(ζ_N)`.
pub fn twisted_algebra_simple_oracle(alpha: &Cocycle) -> Result<bool> {
    let g = &alpha.group;
    let n = g.order();
    if n > ORACLE_ORDER_LIMIT {
        return Err(HopfError::LimitExceeded {
            what: "group order for the simplicity oracle",
            actual: n,
            limit: ORACLE_ORDER_LIMIT,
        });
    }
    let m = alpha.modulus;
    let val = |s: usize, t: usize| CycloNum::from_root(m, RootExp::new(m, alpha.exp(s, t) as i64)).expect("same modulus");
    // Column s holds the coordinates of [u_s, u_t] for every t, stacked.
    let mut rows = vec![vec![CycloNum::zero(m); n]; n * n];
    for s in 0..n {
        for t in 0..n {
            let st = g.mul(s, t);
            let ts = g.mul(t, s);
            rows[t * n + st][s] += &val(s, t);
            rows[t * n + ts][s] -= &val(t, s);
        }
    }
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let center_dim = n - rank_cyclo(&rows);
    Ok(center_dim == 1)
}

//! Closed forms for the alternating number `I(G; -1)` of paths, cycles,
//! and wheels, as checked by claim C13.
//!
//! With `sgn(m) = (-1)^m`:
//! paths: `I(P_{3m-2}) = 0`, `I(P_{3m-1}) = I(P_{3m}) = sgn(m)`;
//! cycles: `I(C_{3m}) = 2 sgn(m)`, `I(C_{3m+1}) = sgn(m)`,
//! `I(C_{3m+2}) = -sgn(m)`;
//! wheels (hub plus rim cycle, so `I(W_n) = I(C_{n-1}) - 1` at `-1`):
//! `I(W_{3m}) = I(W_{3m+2}) = sgn(m) - 1`, `I(W_{3m+1}) = 2 sgn(m) - 1`.

use crate::graph::FamilyKind;

fn sign(m: usize) -> i64 {
    if m.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The closed-form alternating number for a path, cycle, or wheel of the
/// given order; `None` for other families or inadmissible orders.
pub fn alternating_number_formula(kind: &FamilyKind) -> Option<i64> {
    match *kind {
        FamilyKind::Path(n) if n >= 1 => Some(match n % 3 {
            1 => 0,                      // n = 3m - 2
            2 => sign((n + 1) / 3),      // n = 3m - 1
            _ => sign(n / 3),            // n = 3m
        }),
        FamilyKind::Cycle(n) if n >= 3 => Some(match n % 3 {
            0 => 2 * sign(n / 3),        // n = 3m
            1 => sign((n - 1) / 3),      // n = 3m + 1
            _ => -sign((n - 2) / 3),     // n = 3m + 2
        }),
        FamilyKind::Wheel(n) if n >= 4 => Some(match n % 3 {
            0 => sign(n / 3) - 1,        // n = 3m
            1 => 2 * sign((n - 1) / 3) - 1, // n = 3m + 1
            _ => sign((n - 2) / 3) - 1,  // n = 3m + 2
        }),
        _ => None,
    }
}

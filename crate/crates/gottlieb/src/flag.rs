use projspace::Field;

use crate::rules::main_exception;

fn pow2_minus(n: u32, c: u32) -> bool {
    (n + c).is_power_of_two()
}

/// Whether a stated result forces G_k(FP^n) = P_k(FP^n). No catalog needed.
pub fn g_equals_p_flag(field: Field, n: u32, k: u32) -> bool {
    if n == 0 || k == 0 {
        return false;
    }
    match field {
        Field::K => n == 2 && cayley::g_equals_p_kp2(k),
        _ if n == 1 => true,
        Field::R => {
            if k == 1 || k == n || n == 2 || k < n {
                return true;
            }
            let s = k - n;
            ((1..=7).contains(&s) && !main_exception(n, s)) || (n % 4 == 3 && (8..=10).contains(&s))
        }
        Field::C => {
            if k == 1 || (3..=2 * n).contains(&k) {
                return true;
            }
            if k == 2 {
                return false;
            }
            if (n, k) == (2, 5) || (n == 2 && (10..=12).contains(&k)) {
                return true;
            }
            let s = k - 2 * n - 1;
            match s {
                1 | 2 | 4 | 5 => true,
                3 => {
                    matches!(n % 12, 7 | 11)
                        || (matches!(n % 12, 2 | 10) && n >= 10 && !pow2_minus(n, 2))
                        || (matches!(n % 24, 1 | 17) && n >= 17)
                }
                6 => n % 4 >= 2,
                8 => n % 4 == 1 && n >= 9,
                21 | 22 => n % 4 == 3 && n >= 11,
                _ => false,
            }
        }
        Field::H => k <= 3 || k == 5 || k == 6 || (n >= 3 && (k == 12 || k == 13)),
    }
}

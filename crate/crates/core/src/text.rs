//! Canonical text rendering shared by every polynomial-like type.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Ascending,
    Descending,
}

fn is_compound(s: &str) -> bool {
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => return true,
            _ => {}
        }
    }
    false
}

fn wrap(s: &str) -> String {
    if is_compound(s) {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// Renders `sum coeffs[i] * var^i`. Empty strings denote zero coefficients.
/// Compound coefficients are always parenthesized; unit coefficients are
/// omitted in front of a power of `var`.
pub fn render_poly(coeffs: &[String], var: &str, order: Order) -> String {
    let mut terms = Vec::new();
    let mut push = |i: usize, c: &str| {
        if c.is_empty() {
            return;
        }
        let power = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let term = if i == 0 {
            wrap(c)
        } else if c == "1" {
            power
        } else {
            format!("{}*{}", wrap(c), power)
        };
        terms.push(term);
    };
    match order {
        Order::Ascending => {
            for (i, c) in coeffs.iter().enumerate() {
                push(i, c);
            }
        }
        Order::Descending => {
            for (i, c) in coeffs.iter().enumerate().rev() {
                push(i, c);
            }
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn descending_polynomial() {
        assert_eq!(
            render_poly(&s(&["1", "1", "", "", "1"]), "T", Order::Descending),
            "T^4+T+1"
        );
        assert_eq!(render_poly(&s(&["", "2"]), "T", Order::Descending), "2*T");
        assert_eq!(render_poly(&s(&[]), "T", Order::Descending), "0");
    }

    #[test]
    fn ascending_with_compound_coefficients() {
        let c = s(&["t^3+t+1", "t^3+t^2", "t+1", "1"]);
        assert_eq!(
            render_poly(&c, "tau", Order::Ascending),
            "(t^3+t+1)+(t^3+t^2)*tau+(t+1)*tau^2+tau^3"
        );
    }

    #[test]
    fn nested_parentheses_are_not_compound() {
        assert_eq!(
            render_poly(&s(&["", "(y+1)*z"]), "T", Order::Descending),
            "(y+1)*z*T"
        );
    }
}

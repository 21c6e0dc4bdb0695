//! Walks from the generating function of a(n) down to the
//! progressions 4n+2 and 4n+3, checking each step coefficientwise.
//!
//! cargo run --example dissection_chain [order]

use qseries::parse;
use qseries::verify::{check_identity, CheckKind, IdentityCheck};

const STEPS: &[(&str, &str, &str)] = &[
    ("f3/f1, 2-dissected", "f3/f1", "f4*f6*f16*f24^2/(f2^2*f8*f12*f48) + q*f6*f8^2*f48/(f2^2*f16*f24)"),
    ("1/f1^2, 2-dissected", "1/f1^2", "f8^5/(f2^5*f16^2) + 2q f4^2*f16^2/(f2^5*f8)"),
    ("a(2n)", "extract(f3/(f1*f6), 2, 0)", "f2*f8*f12^2/(f1^2*f4*f6*f24)"),
    ("a(2n+1)", "extract(f3/(f1*f6), 2, 1)", "f4^2*f24/(f1^2*f8*f12)"),
    ("a(4n+2)", "extract(f3/(f1*f6), 4, 2)", "2*f2*f6^2*f8^2/(f1^4*f3*f12)"),
    ("a(4n+3)", "extract(f3/(f1*f6), 4, 3)", "2*f2^4*f8^2*f12/(f1^5*f4^2*f6)"),
];

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(300);
    for &(name, lhs, rhs) in STEPS {
        let check = IdentityCheck {
            name: name.into(),
            lhs: parse(lhs).unwrap(),
            rhs: parse(rhs).unwrap(),
            kind: CheckKind::Equality,
            order,
        };
        match check_identity(&check) {
            Ok(r) => println!("{r}"),
            Err(e) => println!("{name}\terror: {e}"),
        }
    }
}

use std::fmt;
use std::ops;

use num_bigint::BigInt;
use num_traits::Signed;

/// The subscript `r` of an Euler product `f_r`; always at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EtaAtom(usize);

impl EtaAtom {
    pub fn new(r: usize) -> Option<Self> {
        (r >= 1).then_some(EtaAtom(r))
    }

    pub fn r(self) -> usize {
        self.0
    }
}

/// Parsed eta-quotient expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    /// `q^k`, `k >= 0`.
    QPower(usize),
    F(EtaAtom),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    /// Coefficients on `m*n + j`, re-indexed by `n`.
    Extract {
        expr: Box<Expr>,
        m: usize,
        j: usize,
    },
    /// `q -> q^m`.
    Inflate {
        expr: Box<Expr>,
        m: usize,
    },
    ModRed {
        expr: Box<Expr>,
        modulus: u64,
    },
}

/// Largest `|k|` accepted in `x^k`.
pub const MAX_EXPONENT: i64 = 64;

impl Expr {
    pub fn int(n: impl Into<BigInt>) -> Expr {
        Expr::Int(n.into())
    }

    pub fn q(k: usize) -> Expr {
        Expr::QPower(k)
    }

    /// `f_r`; panics if `r == 0`.
    pub fn f(r: usize) -> Expr {
        Expr::F(EtaAtom::new(r).expect("f_r needs r >= 1"))
    }

    pub fn pow(self, k: i64) -> Expr {
        Expr::Pow(Box::new(self), k)
    }

    pub fn extract(self, m: usize, j: usize) -> Expr {
        Expr::Extract { expr: Box::new(self), m, j }
    }

    pub fn inflate(self, m: usize) -> Expr {
        Expr::Inflate { expr: Box::new(self), m }
    }

    pub fn modred(self, modulus: u64) -> Expr {
        Expr::ModRed { expr: Box::new(self), modulus }
    }

    /// Binding strength used by the printer: sums 1, products 2,
    /// prefix minus 3, powers 4, atoms 5.
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Int(n) if n.is_negative() => 3,
            Expr::Pow(..) => 4,
            Expr::QPower(k) if *k != 1 => 4,
            _ => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.write_bare(f)?;
            f.write_str(")")
        } else {
            self.write_bare(f)
        }
    }

    fn write_bare(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::QPower(1) => f.write_str("q"),
            Expr::QPower(k) => write!(f, "q^{k}"),
            Expr::F(a) => write!(f, "f{}", a.r()),
            Expr::Neg(x) => {
                f.write_str("-")?;
                // "-3" would read back as a negative literal
                let min = if matches!(**x, Expr::Int(_)) { 6 } else { 3 };
                x.write_at(f, min)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(f, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.write_at(f, 2)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write_at(f, 2)?;
                f.write_str(if matches!(self, Expr::Mul(..)) { "*" } else { "/" })?;
                b.write_at(f, 3)
            }
            Expr::Pow(base, k) => {
                // "q^k" reads back as a single q-power atom
                let min = if matches!(**base, Expr::QPower(_)) { 6 } else { 5 };
                base.write_at(f, min)?;
                write!(f, "^{k}")
            }
            Expr::Extract { expr, m, j } => write!(f, "extract({expr}, {m}, {j})"),
            Expr::Inflate { expr, m } => write!(f, "inflate({expr}, {m})"),
            Expr::ModRed { expr, modulus } => write!(f, "mod({expr}, {modulus})"),
        }
    }
}

/// Canonical text; parsing it back yields a structurally equal tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_bare(f)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl ops::$trait for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

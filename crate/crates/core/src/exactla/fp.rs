//! Prime-field residues with a modulus chosen at run time.

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign};

use num_traits::{Num, One, Zero};

/// An element of `F_p`.
///
/// A modulus of 0 marks an integer constant that has not met a field yet
/// (what `Zero::zero()` and `One::one()` produce); it takes on the modulus of
/// the first bound operand it is combined with. Bound values keep the residue
/// in `[0, p)`.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    value: i128,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i128, p: u64) -> Self {
        debug_assert!(p >= 2);
        Fp {
            value: value.rem_euclid(p as i128),
            modulus: p,
        }
    }

    pub(crate) fn unbound(value: i128) -> Self {
        Fp { value, modulus: 0 }
    }

    /// 0 when the value is an unbound integer constant.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue_mod(&self, p: u64) -> u64 {
        self.value.rem_euclid(p as i128) as u64
    }

    fn join(a: u64, b: u64) -> u64 {
        match (a, b) {
            (0, q) => q,
            (p, 0) => p,
            (p, q) => {
                assert_eq!(p, q, "mixing residues of different prime fields");
                p
            }
        }
    }

    fn make(value: i128, modulus: u64) -> Self {
        if modulus == 0 {
            Fp::unbound(value)
        } else {
            Fp::new(value, modulus)
        }
    }

    pub fn inv(&self) -> Self {
        if self.modulus == 0 {
            match self.value {
                1 | -1 => return *self,
                _ => panic!("inverse of an unbound integer constant {}", self.value),
            }
        }
        let p = self.modulus as i128;
        assert!(self.value != 0, "inverse of zero in F_{p}");
        // extended Euclid on (value, p)
        let (mut r0, mut r1) = (self.value, p);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Fp::new(s0, self.modulus)
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        match (self.modulus, other.modulus) {
            (0, 0) => self.value == other.value,
            (0, p) => self.value.rem_euclid(p as i128) == other.value,
            (p, 0) => self.value == other.value.rem_euclid(p as i128),
            (p, q) => p == q && self.value == other.value,
        }
    }
}

impl Eq for Fp {}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp::unbound(0)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp::unbound(1)
    }
}

impl Neg for Fp {
    type Output = Fp;

    fn neg(self) -> Fp {
        Fp::make(-self.value, self.modulus)
    }
}

impl Add<&Fp> for Fp {
    type Output = Fp;

    fn add(self, rhs: &Fp) -> Fp {
        let m = Fp::join(self.modulus, rhs.modulus);
        Fp::make(self.value + rhs.value, m)
    }
}

impl Sub<&Fp> for Fp {
    type Output = Fp;

    fn sub(self, rhs: &Fp) -> Fp {
        let m = Fp::join(self.modulus, rhs.modulus);
        Fp::make(self.value - rhs.value, m)
    }
}

impl Mul<&Fp> for Fp {
    type Output = Fp;

    fn mul(self, rhs: &Fp) -> Fp {
        let m = Fp::join(self.modulus, rhs.modulus);
        if m == 0 {
            return Fp::unbound(self.value * rhs.value);
        }
        let p = m as i128;
        Fp::new(self.value.rem_euclid(p) * rhs.value.rem_euclid(p), m)
    }
}

impl Div<&Fp> for Fp {
    type Output = Fp;

    fn div(self, rhs: &Fp) -> Fp {
        let m = Fp::join(self.modulus, rhs.modulus);
        let inv = if rhs.modulus == 0 && m != 0 {
            Fp::new(rhs.value, m).inv()
        } else {
            rhs.inv()
        };
        self * &inv
    }
}

/// Field remainder: always zero for a nonzero divisor.
impl Rem<&Fp> for Fp {
    type Output = Fp;

    fn rem(self, rhs: &Fp) -> Fp {
        assert!(!rhs.is_zero(), "remainder by zero");
        Fp::make(0, Fp::join(self.modulus, rhs.modulus))
    }
}

macro_rules! by_value {
    ($($tr:ident $m:ident $atr:ident $am:ident),*) => {$(
        impl $tr<Fp> for Fp {
            type Output = Fp;
            fn $m(self, rhs: Fp) -> Fp {
                $tr::$m(self, &rhs)
            }
        }
        impl $atr<Fp> for Fp {
            fn $am(&mut self, rhs: Fp) {
                *self = $tr::$m(*self, &rhs);
            }
        }
        impl $atr<&Fp> for Fp {
            fn $am(&mut self, rhs: &Fp) {
                *self = $tr::$m(*self, rhs);
            }
        }
    )*};
}

by_value!(
    Add add AddAssign add_assign,
    Sub sub SubAssign sub_assign,
    Mul mul MulAssign mul_assign,
    Div div DivAssign div_assign,
    Rem rem RemAssign rem_assign
);

impl Num for Fp {
    type FromStrRadixErr = std::num::ParseIntError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i128::from_str_radix(s, radix).map(Fp::unbound)
    }
}

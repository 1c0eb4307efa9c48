// Copyright 2026 the eqvol Authors
// SPDX-License-Identifier: Apache-2.0

//! Points and vectors in the plane and in 3-space, plus the determinant
//! brackets every invariant is built from.

use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

/// A vector (or point) in 3-space.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// A vector (or point) in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);
    pub const X: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const Y: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const Z: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    /// Embeds a planar point at height `z`.
    #[inline]
    pub fn from_planar(p: Vec2, z: f64) -> Self {
        Vec3::new(p.x, p.y, z)
    }

    #[inline]
    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline]
    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    /// Unit vector in the same direction; `None` for the zero vector.
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self / n)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    #[inline]
    pub fn xy(self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }

    #[inline]
    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    #[inline]
    pub fn component(self, axis: usize) -> f64 {
        match axis {
            0 => self.x,
            1 => self.y,
            _ => self.z,
        }
    }

    pub fn distance(self, o: Vec3) -> f64 {
        (self - o).norm()
    }

    pub fn lerp(self, o: Vec3, t: f64) -> Vec3 {
        self + (o - self) * t
    }
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2::new(0.0, 0.0);

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    #[inline]
    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn to_array(self) -> [f64; 2] {
        [self.x, self.y]
    }

    pub fn distance(self, o: Vec2) -> f64 {
        (self - o).norm()
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(a: [f64; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl From<[f64; 2]> for Vec2 {
    fn from(a: [f64; 2]) -> Self {
        Vec2::new(a[0], a[1])
    }
}

macro_rules! impl_vec_ops {
    ($t:ident { $($f:ident),+ }) => {
        impl Add for $t {
            type Output = $t;
            #[inline]
            fn add(self, o: $t) -> $t { $t { $($f: self.$f + o.$f),+ } }
        }
        impl Sub for $t {
            type Output = $t;
            #[inline]
            fn sub(self, o: $t) -> $t { $t { $($f: self.$f - o.$f),+ } }
        }
        impl Neg for $t {
            type Output = $t;
            #[inline]
            fn neg(self) -> $t { $t { $($f: -self.$f),+ } }
        }
        impl Mul<f64> for $t {
            type Output = $t;
            #[inline]
            fn mul(self, s: f64) -> $t { $t { $($f: self.$f * s),+ } }
        }
        impl Mul<$t> for f64 {
            type Output = $t;
            #[inline]
            fn mul(self, v: $t) -> $t { v * self }
        }
        impl Div<f64> for $t {
            type Output = $t;
            #[inline]
            fn div(self, s: f64) -> $t { $t { $($f: self.$f / s),+ } }
        }
        impl AddAssign for $t {
            #[inline]
            fn add_assign(&mut self, o: $t) { $(self.$f += o.$f;)+ }
        }
        impl SubAssign for $t {
            #[inline]
            fn sub_assign(&mut self, o: $t) { $(self.$f -= o.$f;)+ }
        }
    };
}

impl_vec_ops!(Vec3 { x, y, z });
impl_vec_ops!(Vec2 { x, y });

/// The bracket `[u, v, w]`: signed volume of the parallelepiped spanned by
/// three vectors.
#[inline]
pub fn det3(u: Vec3, v: Vec3, w: Vec3) -> f64 {
    u.dot(v.cross(w))
}

/// The bracket `[u, v]`: signed area of the parallelogram spanned by two
/// planar vectors.
#[inline]
pub fn det2(u: Vec2, v: Vec2) -> f64 {
    u.x * v.y - u.y * v.x
}

/// Index of the coordinate axis along which `n` is largest in magnitude.
pub(crate) fn dominant_axis(n: Vec3) -> usize {
    let a = [n.x.abs(), n.y.abs(), n.z.abs()];
    if a[0] >= a[1] && a[0] >= a[2] {
        0
    } else if a[1] >= a[2] {
        1
    } else {
        2
    }
}

/// Solves `target = p·a + q·b` for vectors lying in a common plane with
/// normal `normal`. The coordinate along the dominant axis of `normal` is
/// dropped and the remaining 2×2 system is solved by Cramer's rule.
pub(crate) fn solve_in_plane(a: Vec3, b: Vec3, target: Vec3, normal: Vec3) -> Option<(f64, f64)> {
    let drop = dominant_axis(normal);
    let (i, j) = match drop {
        0 => (1, 2),
        1 => (2, 0),
        _ => (0, 1),
    };
    let a2 = Vec2::new(a.component(i), a.component(j));
    let b2 = Vec2::new(b.component(i), b.component(j));
    let t2 = Vec2::new(target.component(i), target.component(j));
    let d = det2(a2, b2);
    if d == 0.0 || !d.is_finite() {
        return None;
    }
    Some((det2(t2, b2) / d, det2(a2, t2) / d))
}

/// Least-squares coefficients of `target ≈ p·a + q·b` in 3-space, together
/// with the norm of the residual.
pub(crate) fn least_squares_pair(a: Vec3, b: Vec3, target: Vec3) -> Option<(f64, f64, f64)> {
    let aa = a.dot(a);
    let ab = a.dot(b);
    let bb = b.dot(b);
    let at = a.dot(target);
    let bt = b.dot(target);
    let d = aa * bb - ab * ab;
    if d <= 0.0 || !d.is_finite() {
        return None;
    }
    let p = (at * bb - bt * ab) / d;
    let q = (aa * bt - ab * at) / d;
    let r = (target - a * p - b * q).norm();
    Some((p, q, r))
}

/// Real cube root keeping the sign of the argument.
#[inline]
pub fn signed_cbrt(x: f64) -> f64 {
    x.cbrt()
}

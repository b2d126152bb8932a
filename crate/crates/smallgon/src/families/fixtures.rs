//! Reference polygons with their separately reported widths and, where
//! available, perimeters. `F8ref` carries the 10-digit coordinates of the
//! exact octagon; the others are stored at the 4-decimal precision of their
//! published drawings.

use super::FamilyError;
use crate::geometry::{Point, Polygon};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureName {
    /// Width-optimal non-equilateral quadrilateral.
    Q4,
    /// Reuleaux subdivision of the triangle into a hexagon.
    R36,
    /// Perimeter-optimal small octagon.
    H8,
    /// Width-optimal non-equilateral small octagon.
    B8,
    F8Ref,
    F16Ref,
    F32Ref,
    G16Ref,
    G32Ref,
}

impl FixtureName {
    pub const ALL: [FixtureName; 9] = [
        FixtureName::Q4,
        FixtureName::R36,
        FixtureName::H8,
        FixtureName::B8,
        FixtureName::F8Ref,
        FixtureName::F16Ref,
        FixtureName::F32Ref,
        FixtureName::G16Ref,
        FixtureName::G32Ref,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FixtureName::Q4 => "Q4",
            FixtureName::R36 => "R36",
            FixtureName::H8 => "H8",
            FixtureName::B8 => "B8",
            FixtureName::F8Ref => "F8ref",
            FixtureName::F16Ref => "F16ref",
            FixtureName::F32Ref => "F32ref",
            FixtureName::G16Ref => "G16ref",
            FixtureName::G32Ref => "G32ref",
        }
    }
}

impl std::fmt::Display for FixtureName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for FixtureName {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let lower = s.to_ascii_lowercase();
        FixtureName::ALL
            .into_iter()
            .find(|name| name.as_str().to_ascii_lowercase() == lower)
            .ok_or_else(|| FamilyError::UnknownFixture(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FixtureInfo {
    pub name: FixtureName,
    pub reported_width: f64,
    pub reported_perimeter: Option<f64>,
}

pub fn fixture_info(name: FixtureName) -> FixtureInfo {
    let (reported_width, reported_perimeter) = match name {
        FixtureName::Q4 => (0.8660254038, None),
        FixtureName::R36 => (0.9659258263, None),
        FixtureName::H8 => (0.950394, Some(3.0956093174)),
        FixtureName::B8 => (0.9776087734, None),
        FixtureName::F8Ref => (0.9537763006, None),
        FixtureName::F16Ref => (0.9915310059, None),
        FixtureName::F32Ref => (0.9983271244, None),
        FixtureName::G16Ref => (0.9940673080, None),
        FixtureName::G32Ref => (0.9987316811, None),
    };
    FixtureInfo { name, reported_width, reported_perimeter }
}

pub fn fixture(name: FixtureName) -> Polygon {
    let vertices = coords(name).iter().map(|&(x, y)| Point::new(x, y)).collect();
    Polygon::new(name.as_str(), vertices).expect("fixture tables have at least 3 vertices")
}

fn coords(name: FixtureName) -> &'static [(f64, f64)] {
    match name {
        FixtureName::Q4 => &[
            (0.0000, 0.0000), (0.5000, 0.8660), (0.0000, 1.0000), (-0.5000, 0.8660),
        ],
        FixtureName::R36 => &[
            (0.0000, 0.0000), (0.3660, 0.3660), (0.5000, 0.8660), (0.0000, 1.0000),
            (-0.5000, 0.8660), (-0.3660, 0.3660),
        ],
        FixtureName::H8 => &[
            (0.0000, 0.0000), (0.3228, 0.2134), (0.5000, 0.5574), (0.3796, 0.9251),
            (0.0000, 1.0000), (-0.3796, 0.9251), (-0.5000, 0.5574), (-0.3228, 0.2134),
        ],
        FixtureName::B8 => &[
            (0.0000, 0.0000), (0.2957, 0.2043), (0.5000, 0.5000), (0.4114, 0.9114),
            (0.0000, 1.0000), (-0.4114, 0.9114), (-0.5000, 0.5000), (-0.2957, 0.2043),
        ],
        FixtureName::F8Ref => &[
            (0.0, 0.0),
            (0.3208100713, 0.2140003477),
            (0.5, 0.5554768772),
            (0.3841095838, 0.9232875108),
            (0.0, 0.9575669263),
            (-0.3841095838, 0.9232875108),
            (-0.5, 0.5554768772),
            (-0.3208100713, 0.2140003477),
        ],
        FixtureName::F16Ref => &[
            (0.0000, 0.0000), (0.1873, 0.0568), (0.3569, 0.1545), (0.4491, 0.3271),
            (0.5000, 0.5161), (0.4746, 0.7102), (0.3501, 0.8618), (0.1953, 0.9807),
            (0.0000, 0.9937), (-0.1953, 0.9807), (-0.3501, 0.8618), (-0.4746, 0.7102),
            (-0.5000, 0.5161), (-0.4491, 0.3271), (-0.3569, 0.1545), (-0.1873, 0.0568),
        ],
        FixtureName::F32Ref => &[
            (0.0000, 0.0000), (0.0971, 0.0144), (0.1920, 0.0391), (0.2762, 0.0895),
            (0.3545, 0.1486), (0.4129, 0.2274), (0.4626, 0.3120), (0.4865, 0.4072),
            (0.5000, 0.5044), (0.4943, 0.6023), (0.4613, 0.6948), (0.4185, 0.7830),
            (0.3526, 0.8558), (0.2794, 0.9210), (0.1907, 0.9630), (0.0980, 0.9952),
            (0.0000, 0.9991), (-0.0980, 0.9952), (-0.1907, 0.9630), (-0.2794, 0.9210),
            (-0.3526, 0.8558), (-0.4185, 0.7830), (-0.4613, 0.6948), (-0.4943, 0.6023),
            (-0.5000, 0.5044), (-0.4865, 0.4072), (-0.4626, 0.3120), (-0.4129, 0.2274),
            (-0.3545, 0.1486), (-0.2762, 0.0895), (-0.1920, 0.0391), (-0.0971, 0.0144),
        ],
        FixtureName::G16Ref => &[
            (0.0000, 0.0000), (0.1875, 0.0569), (0.3592, 0.1510), (0.4818, 0.3038),
            (0.4989, 0.4989), (0.4421, 0.6864), (0.3479, 0.8582), (0.1951, 0.9808),
            (0.0000, 0.9979), (-0.1951, 0.9808), (-0.3479, 0.8582), (-0.4421, 0.6864),
            (-0.4989, 0.4989), (-0.4818, 0.3038), (-0.3592, 0.1510), (-0.1875, 0.0569),
        ],
        FixtureName::G32Ref => &[
            (0.0000, 0.0000), (0.0971, 0.0144), (0.1922, 0.0384), (0.2809, 0.0804),
            (0.3535, 0.1464), (0.4120, 0.2253), (0.4623, 0.3095), (0.4952, 0.4019),
            (0.4999, 0.4999), (0.4855, 0.5970), (0.4616, 0.6922), (0.4195, 0.7808),
            (0.3535, 0.8534), (0.2747, 0.9119), (0.1905, 0.9622), (0.0980, 0.9952),
            (0.0000, 0.9999), (-0.0980, 0.9952), (-0.1905, 0.9622), (-0.2747, 0.9119),
            (-0.3535, 0.8534), (-0.4195, 0.7808), (-0.4616, 0.6922), (-0.4855, 0.5970),
            (-0.4999, 0.4999), (-0.4952, 0.4019), (-0.4623, 0.3095), (-0.4120, 0.2253),
            (-0.3535, 0.1464), (-0.2809, 0.0804), (-0.1922, 0.0384), (-0.0971, 0.0144),
        ],
    }
}

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpaceId {
    Sphere(u32),
    So(u32),
    Su(u32),
    Sp(u32),
    Kp2,
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceId::Sphere(n) => write!(f, "S{}", n),
            SpaceId::So(n) => write!(f, "SO{}", n),
            SpaceId::Su(n) => write!(f, "SU{}", n),
            SpaceId::Sp(n) => write!(f, "Sp{}", n),
            SpaceId::Kp2 => write!(f, "KP2"),
        }
    }
}

impl FromStr for SpaceId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "KP2" {
            return Ok(SpaceId::Kp2);
        }
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| format!("bad space {:?}", s))?;
        let (head, num) = s.split_at(split);
        let n: u32 = num.parse().map_err(|_| format!("bad space {:?}", s))?;
        match head {
            "S" => Ok(SpaceId::Sphere(n)),
            "SO" => Ok(SpaceId::So(n)),
            "SU" => Ok(SpaceId::Su(n)),
            "Sp" => Ok(SpaceId::Sp(n)),
            _ => Err(format!("bad space {:?}", s)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in [SpaceId::Sphere(3), SpaceId::So(5), SpaceId::Su(4), SpaceId::Sp(2), SpaceId::Kp2] {
            assert_eq!(s.to_string().parse::<SpaceId>().unwrap(), s);
        }
        assert!("X3".parse::<SpaceId>().is_err());
        assert!("S".parse::<SpaceId>().is_err());
    }
}

use std::fmt;

use fga::{Ambient, FgaError, Order, SubgroupSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Exact,
    LowerBound,
    UpperBound,
    Bounds,
    NotCovered,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::LowerBound => "lower_bound",
            Status::UpperBound => "upper_bound",
            Status::Bounds => "bounds",
            Status::NotCovered => "not_covered",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An answer: a subgroup of `ambient` known exactly or between two bounds.
///
/// `value` is the exact subgroup or the lower bound; `upper` is set for
/// `Bounds` and `UpperBound` (whose `value` is then `Zero`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupResult {
    pub status: Status,
    pub value: SubgroupSpec,
    pub upper: Option<SubgroupSpec>,
    pub ambient: Option<Ambient>,
    pub citation: String,
    pub notes: Vec<String>,
}

impl GroupResult {
    pub fn exact(ambient: Ambient, value: SubgroupSpec, citation: impl Into<String>) -> Self {
        GroupResult { status: Status::Exact, value, upper: None, ambient: Some(ambient), citation: citation.into(), notes: vec![] }
    }

    pub fn bounds(ambient: Ambient, lower: SubgroupSpec, upper: SubgroupSpec, citation: impl Into<String>) -> Self {
        GroupResult {
            status: Status::Bounds,
            value: lower,
            upper: Some(upper),
            ambient: Some(ambient),
            citation: citation.into(),
            notes: vec![],
        }
    }

    pub fn lower_bound(ambient: Ambient, lower: SubgroupSpec, citation: impl Into<String>) -> Self {
        GroupResult { status: Status::LowerBound, ..Self::exact(ambient, lower, citation) }
    }

    pub fn upper_bound(ambient: Ambient, upper: SubgroupSpec, citation: impl Into<String>) -> Self {
        GroupResult { status: Status::UpperBound, upper: Some(upper), ..Self::exact(ambient, SubgroupSpec::Zero, citation) }
    }

    pub fn not_covered(reason: impl Into<String>) -> Self {
        GroupResult {
            status: Status::NotCovered,
            value: SubgroupSpec::Zero,
            upper: None,
            ambient: None,
            citation: reason.into(),
            notes: vec![],
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_covered(&self) -> bool {
        self.status != Status::NotCovered
    }

    /// Lower end of the known range (Zero when nothing is known below).
    pub fn lower(&self) -> SubgroupSpec {
        match self.status {
            Status::NotCovered | Status::UpperBound => SubgroupSpec::Zero,
            _ => self.value.clone(),
        }
    }

    /// Upper end of the known range (Whole when nothing is known above).
    pub fn upper_spec(&self) -> SubgroupSpec {
        match self.status {
            Status::Exact => self.value.clone(),
            Status::Bounds | Status::UpperBound => self.upper.clone().unwrap_or(SubgroupSpec::Whole),
            Status::LowerBound | Status::NotCovered => SubgroupSpec::Whole,
        }
    }

    /// Index of the lower and upper ends in the ambient group.
    pub fn indices(&self) -> Result<(Order, Order), FgaError> {
        let amb = self.ambient.as_ref().ok_or_else(|| FgaError::Unresolvable("no ambient group".into()))?;
        Ok((amb.index(&self.lower())?, amb.index(&self.upper_spec())?))
    }

    /// Lower end contained in the upper end, both resolvable.
    pub fn is_consistent(&self) -> bool {
        match &self.ambient {
            None => self.status == Status::NotCovered,
            Some(a) => a.contains(&self.upper_spec(), &self.lower()).unwrap_or(false),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fga::FgAbGroup;

    #[test]
    fn bounds_are_checked() {
        let amb = Ambient::single(FgAbGroup::integers());
        let r = GroupResult::bounds(amb.clone(), SubgroupSpec::Multiple(12), SubgroupSpec::Multiple(6), "x");
        assert!(r.is_consistent());
        assert_eq!(r.indices().unwrap(), (Order::Finite(12), Order::Finite(6)));
        let bad = GroupResult::bounds(amb, SubgroupSpec::Multiple(4), SubgroupSpec::Multiple(6), "x");
        assert!(!bad.is_consistent());
        assert!(GroupResult::not_covered("no rule").is_consistent());
    }
}

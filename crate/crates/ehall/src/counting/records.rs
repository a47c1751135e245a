//! Count records and their machine-readable renderings.

use std::fmt;

/// The counted family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Comm,
    Comm4Z1,
    Comm4Z2Open,
    Quot,
    QuotFlag,
    LocusL,
    LocusM,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Comm => "comm",
            Family::Comm4Z1 => "comm4_z1",
            Family::Comm4Z2Open => "comm4_z2open",
            Family::Quot => "quot",
            Family::QuotFlag => "quot_flag",
            Family::LocusL => "locus_L",
            Family::LocusM => "locus_M",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One exact point count with its parameters and, when a group acts freely,
/// the group order and the quotient count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountRecord {
    pub family: Family,
    pub n: Option<u32>,
    pub d: Option<u32>,
    pub r: Option<u32>,
    pub lambda: Option<u32>,
    pub mu: Option<u32>,
    pub q: u64,
    pub raw: u128,
    pub group_order: Option<u128>,
    pub count: u128,
}

fn opt_str<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

impl CountRecord {
    pub fn csv_header() -> &'static str {
        "family,n,d,r,lambda,mu,q,raw,group_order,count"
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.family,
            opt_str(&self.n),
            opt_str(&self.d),
            opt_str(&self.r),
            opt_str(&self.lambda),
            opt_str(&self.mu),
            self.q,
            self.raw,
            opt_str(&self.group_order),
            self.count
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.family.name(),
            "n": self.n,
            "d": self.d,
            "r": self.r,
            "lambda": self.lambda,
            "mu": self.mu,
            "q": self.q,
            "raw": self.raw.to_string(),
            "group_order": self.group_order.map(|g| g.to_string()),
            "count": self.count.to_string(),
        })
    }
}

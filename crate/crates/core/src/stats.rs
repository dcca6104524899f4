//! Per-attribute counts and percentages over lexicon entries.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::error::StatsError;
use crate::lexicon::{attributes_of, Attribute, EntryStatus, LexiconEntry, TagSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    VerifiedOnly,
    /// Candidate and verified entries. Rejected entries never count.
    AllCandidates,
}

impl Scope {
    pub const fn admits(self, status: EntryStatus) -> bool {
        match self {
            Scope::VerifiedOnly => matches!(status, EntryStatus::Verified),
            Scope::AllCandidates => matches!(status, EntryStatus::Verified | EntryStatus::Candidate),
        }
    }
}

/// A percentage held as an integer count of tenths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Percent {
    tenths: u64,
}

impl Percent {
    /// `part / whole × 100`, rounded half-up to one decimal using integer
    /// arithmetic only.
    pub fn from_ratio(part: u64, whole: u64) -> Self {
        assert!(whole > 0, "percentage of an empty total");
        // round(part * 1000 / whole) == floor((2 * part * 1000 + whole) / (2 * whole))
        let tenths = (2 * part * 1000 + whole) / (2 * whole);
        Self { tenths }
    }

    pub const fn tenths(self) -> u64 {
        self.tenths
    }
}

impl fmt::Display for Percent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.tenths / 10, self.tenths % 10)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttributeCounts {
    counts: BTreeMap<Attribute, u64>,
    total_words: u64,
}

impl AttributeCounts {
    /// Count each tag set once per top-level attribute it carries.
    pub fn from_tag_sets<'a, I>(tag_sets: I) -> Result<Self, StatsError>
    where
        I: IntoIterator<Item = &'a TagSet>,
    {
        let mut counts: BTreeMap<Attribute, u64> = Attribute::ALL.into_iter().map(|a| (a, 0)).collect();
        let mut total_words = 0;
        for tags in tag_sets {
            total_words += 1;
            for a in attributes_of(tags) {
                *counts.entry(a).or_default() += 1;
            }
        }
        if total_words == 0 {
            return Err(StatsError::EmptyScope);
        }
        Ok(Self { counts, total_words })
    }

    pub fn get(&self, attribute: Attribute) -> u64 {
        self.counts.get(&attribute).copied().unwrap_or(0)
    }

    pub fn total_words(&self) -> u64 {
        self.total_words
    }

    /// Sum over attributes; exceeds `total_words` when entries carry several.
    pub fn tag_slots(&self) -> u64 {
        self.counts.values().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusStats {
    pub counts: AttributeCounts,
    pub percentages: BTreeMap<Attribute, Percent>,
}

impl CorpusStats {
    pub fn from_counts(counts: AttributeCounts) -> Self {
        let percentages = Attribute::ALL
            .into_iter()
            .map(|a| (a, Percent::from_ratio(counts.get(a), counts.total_words())))
            .collect();
        Self { counts, percentages }
    }

    pub fn percent(&self, attribute: Attribute) -> Percent {
        self.percentages[&attribute]
    }
}

pub fn compute_attribute_stats<'a, I>(entries: I, scope: Scope) -> Result<CorpusStats, StatsError>
where
    I: IntoIterator<Item = &'a LexiconEntry>,
{
    let in_scope: Vec<&TagSet> = entries
        .into_iter()
        .filter(|e| scope.admits(e.status))
        .map(|e| &e.tags)
        .collect();
    AttributeCounts::from_tag_sets(in_scope).map(CorpusStats::from_counts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
}

/// Render the attribute table.
///
/// Text layout, single-space separated in fixed column order:
///
/// ```text
/// attribute IMP CON T REF VAR WN
/// Tot 51 41 11 27 22 21
/// % 42.5 34.2 9.2 22.5 18.3 17.5
/// words 120
/// ```
pub fn render_table(stats: &CorpusStats, format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Text => {
            out.push_str("attribute");
            for a in Attribute::ALL {
                let _ = write!(out, " {}", a.code());
            }
            out.push_str("\nTot");
            for a in Attribute::ALL {
                let _ = write!(out, " {}", stats.counts.get(a));
            }
            out.push_str("\n%");
            for a in Attribute::ALL {
                let _ = write!(out, " {}", stats.percent(a));
            }
            let _ = writeln!(out, "\nwords {}", stats.counts.total_words());
        }
        TableFormat::Csv => {
            out.push_str("attribute,count,percentage\n");
            for a in Attribute::ALL {
                let _ = writeln!(out, "{},{},{}", a.code(), stats.counts.get(a), stats.percent(a));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{AttributeTag, EntrySource, Phrase};
    use alloc::format;
    use alloc::string::ToString;

    /// Decimal long division to two places, then half-up on the second.
    /// Independent of the production integer formula.
    fn oracle_percent(part: u64, whole: u64) -> String {
        let scaled = part * 100;
        let int = scaled / whole;
        let mut rem = scaled % whole;
        let mut digits = [0u64; 2];
        for d in &mut digits {
            rem *= 10;
            *d = rem / whole;
            rem %= whole;
        }
        let mut tenths = int * 10 + digits[0];
        if digits[1] >= 5 {
            tenths += 1;
        }
        format!("{}.{}", tenths / 10, tenths % 10)
    }

    fn entry(i: usize, tags: &[Attribute], status: EntryStatus) -> LexiconEntry {
        LexiconEntry::new(
            Phrase::new([format!("w{i}")]).unwrap(),
            tags.iter().map(|a| AttributeTag::new(*a)).collect(),
            status,
            EntrySource::User,
        )
    }

    #[test]
    fn half_up_matches_oracle() {
        for whole in 1..=130 {
            for part in 0..=whole {
                assert_eq!(
                    Percent::from_ratio(part, whole).to_string(),
                    oracle_percent(part, whole),
                    "{part}/{whole}"
                );
            }
        }
    }

    #[test]
    fn discriminates_truncation() {
        assert_eq!(Percent::from_ratio(41, 120).to_string(), "34.2");
        assert_eq!(Percent::from_ratio(11, 120).to_string(), "9.2");
        assert_eq!(Percent::from_ratio(22, 120).to_string(), "18.3");
        assert_eq!(Percent::from_ratio(1, 8).to_string(), "12.5");
        assert_eq!(Percent::from_ratio(1, 16).to_string(), "6.3");
    }

    #[test]
    fn singleton() {
        let e = [entry(0, &[Attribute::Implicit], EntryStatus::Verified)];
        let st = compute_attribute_stats(&e, Scope::VerifiedOnly).unwrap();
        let text = render_table(&st, TableFormat::Text);
        assert!(text.contains("\n% 100.0 0.0 0.0 0.0 0.0 0.0\n"), "{text}");
    }

    #[test]
    fn multi_label_counts_once_per_attribute() {
        let e = [entry(
            0,
            &[Attribute::Implicit, Attribute::Connectives],
            EntryStatus::Verified,
        )];
        let st = compute_attribute_stats(&e, Scope::VerifiedOnly).unwrap();
        assert_eq!(st.counts.tag_slots(), 2);
        assert_eq!(st.counts.total_words(), 1);
    }

    #[test]
    fn sub_attributes_collapse() {
        let mut e = entry(0, &[], EntryStatus::Verified);
        e.tags.insert("CON.verb".parse().unwrap());
        e.tags.insert("CON.adjective".parse().unwrap());
        let st = compute_attribute_stats([&e], Scope::VerifiedOnly).unwrap();
        assert_eq!(st.counts.get(Attribute::Connectives), 1);
    }

    #[test]
    fn scopes_and_empty() {
        let e = [
            entry(0, &[Attribute::Implicit], EntryStatus::Candidate),
            entry(1, &[Attribute::Temporal], EntryStatus::Rejected),
        ];
        assert_eq!(
            compute_attribute_stats(&e, Scope::VerifiedOnly),
            Err(StatsError::EmptyScope)
        );
        let st = compute_attribute_stats(&e, Scope::AllCandidates).unwrap();
        assert_eq!(st.counts.total_words(), 1);
        assert_eq!(st.counts.get(Attribute::Temporal), 0);
    }

    #[test]
    fn csv_layout() {
        let e = [entry(0, &[Attribute::Weakness], EntryStatus::Verified)];
        let st = compute_attribute_stats(&e, Scope::VerifiedOnly).unwrap();
        assert_eq!(
            render_table(&st, TableFormat::Csv),
            "attribute,count,percentage\nIMP,0,0.0\nCON,0,0.0\nT,0,0.0\nREF,0,0.0\nVAR,0,0.0\nWN,1,100.0\n"
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn tags_strategy() -> impl Strategy<Value = alloc::vec::Vec<Attribute>> {
            proptest::collection::vec(proptest::sample::select(Attribute::ALL.to_vec()), 0..4)
        }

        proptest! {
            #[test]
            fn permutation_invariant(sets in proptest::collection::vec(tags_strategy(), 1..30), seed in any::<u64>()) {
                let entries: alloc::vec::Vec<_> = sets.iter().enumerate().map(|(i, t)| entry(i, t, EntryStatus::Verified)).collect();
                let mut shuffled = entries.clone();
                // Deterministic rotation + reversal as a permutation.
                let k = (seed as usize) % shuffled.len();
                shuffled.rotate_left(k);
                shuffled.reverse();
                let a = compute_attribute_stats(&entries, Scope::VerifiedOnly).unwrap();
                let b = compute_attribute_stats(&shuffled, Scope::VerifiedOnly).unwrap();
                prop_assert_eq!(&a, &b);
                for attr in Attribute::ALL {
                    prop_assert!(a.counts.get(attr) <= a.counts.total_words());
                }
            }

            #[test]
            fn adding_an_entry_bumps_exactly_its_attributes(
                sets in proptest::collection::vec(tags_strategy(), 1..20),
                extra in tags_strategy(),
            ) {
                let mut entries: alloc::vec::Vec<_> = sets.iter().enumerate().map(|(i, t)| entry(i, t, EntryStatus::Verified)).collect();
                let before = compute_attribute_stats(&entries, Scope::VerifiedOnly).unwrap();
                entries.push(entry(999, &extra, EntryStatus::Verified));
                let after = compute_attribute_stats(&entries, Scope::VerifiedOnly).unwrap();
                prop_assert_eq!(after.counts.total_words(), before.counts.total_words() + 1);
                for attr in Attribute::ALL {
                    let bump = u64::from(extra.contains(&attr));
                    prop_assert_eq!(after.counts.get(attr), before.counts.get(attr) + bump);
                }
            }
        }
    }
}

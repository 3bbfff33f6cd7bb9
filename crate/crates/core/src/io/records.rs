//! The table of improved records for `46 <= n <= 99` and a report comparing
//! computed counts against it.

use std::collections::BTreeMap;
use std::fmt;

/// `(n, new count, previous best count)`.
const TABLE: [(usize, u64, u64); 49] = [
    (46, 59463, 59464),
    (47, 65059, 65061),
    (49, 77428, 77430),
    (50, 84223, 84226),
    (52, 99169, 99170),
    (53, 107347, 107355),
    (54, 115979, 115994),
    (56, 134917, 134930),
    (57, 145174, 145178),
    (58, 156049, 156058),
    (59, 167506, 167514),
    (61, 192289, 192293),
    (63, 219659, 219683),
    (64, 234464, 234470),
    (65, 249962, 249988),
    (66, 266151, 266188),
    (67, 283238, 283286),
    (68, 301057, 301098),
    (69, 319691, 319737),
    (70, 339254, 339297),
    (71, 359645, 359695),
    (72, 380926, 380978),
    (73, 403180, 403234),
    (74, 426419, 426466),
    (75, 450492, 450550),
    (76, 475793, 475849),
    (77, 502021, 502079),
    (78, 529291, 529350),
    (79, 557745, 557849),
    (80, 587289, 587367),
    (81, 617958, 618048),
    (82, 649900, 649983),
    (83, 682986, 683096),
    (84, 717280, 717384),
    (85, 753013, 753079),
    (86, 789960, 790038),
    (87, 828165, 828233),
    (88, 867911, 868023),
    (89, 908972, 909128),
    (90, 951418, 951526),
    (91, 995486, 995678),
    (92, 1040954, 1041165),
    (93, 1087981, 1088217),
    (94, 1136655, 1136919),
    (95, 1187165, 1187263),
    (96, 1238918, 1239003),
    (97, 1292796, 1292802),
    (98, 1348070, 1348072),
    (99, 1405096, 1405132),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecordEntry {
    pub new_count: u64,
    pub previous_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordTable {
    entries: BTreeMap<usize, RecordEntry>,
}

impl RecordTable {
    /// The vendored table.
    pub fn published() -> Self {
        RecordTable {
            entries: TABLE
                .iter()
                .map(|&(n, new_count, previous_count)| {
                    (
                        n,
                        RecordEntry {
                            new_count,
                            previous_count,
                        },
                    )
                })
                .collect(),
        }
    }

    pub fn from_entries(entries: BTreeMap<usize, RecordEntry>) -> Self {
        RecordTable { entries }
    }

    pub fn get(&self, n: usize) -> Option<&RecordEntry> {
        self.entries.get(&n)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &RecordEntry)> {
        self.entries.iter().map(|(&n, e)| (n, e))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordOutcome {
    Match,
    Beats { by: u64 },
    Misses { by: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordLine {
    pub n: usize,
    pub computed: u64,
    pub record: u64,
    pub outcome: RecordOutcome,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RecordReport {
    pub lines: Vec<RecordLine>,
    /// Sizes that were computed but have no table row.
    pub unlisted: Vec<usize>,
}

impl RecordReport {
    pub fn matches(&self) -> usize {
        self.count(|o| matches!(o, RecordOutcome::Match))
    }

    pub fn beats(&self) -> usize {
        self.count(|o| matches!(o, RecordOutcome::Beats { .. }))
    }

    pub fn misses(&self) -> usize {
        self.count(|o| matches!(o, RecordOutcome::Misses { .. }))
    }

    fn count(&self, pred: impl Fn(&RecordOutcome) -> bool) -> usize {
        self.lines.iter().filter(|l| pred(&l.outcome)).count()
    }

    pub fn outcome(&self, n: usize) -> Option<RecordOutcome> {
        self.lines.iter().find(|l| l.n == n).map(|l| l.outcome)
    }
}

impl fmt::Display for RecordReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            let verdict = match l.outcome {
                RecordOutcome::Match => "match".to_string(),
                RecordOutcome::Beats { by } => format!("beats by {by}"),
                RecordOutcome::Misses { by } => format!("misses by {by}"),
            };
            writeln!(f, "n={} computed={} record={} {verdict}", l.n, l.computed, l.record)?;
        }
        for n in &self.unlisted {
            writeln!(f, "n={n} not in table")?;
        }
        writeln!(
            f,
            "summary: {} match, {} beat, {} miss",
            self.matches(),
            self.beats(),
            self.misses()
        )
    }
}

pub fn verify_records(computed: &BTreeMap<usize, u64>, table: &RecordTable) -> RecordReport {
    let mut report = RecordReport::default();
    for (&n, &count) in computed {
        let Some(entry) = table.get(n) else {
            report.unlisted.push(n);
            continue;
        };
        let record = entry.new_count;
        let outcome = match count.cmp(&record) {
            std::cmp::Ordering::Equal => RecordOutcome::Match,
            std::cmp::Ordering::Less => RecordOutcome::Beats { by: record - count },
            std::cmp::Ordering::Greater => RecordOutcome::Misses { by: count - record },
        };
        report.lines.push(RecordLine {
            n,
            computed: count,
            record,
            outcome,
        });
    }
    report
}

//! Tuning tables and their serialized forms.
//!
//! JSON and CSV carry the exact value of every note, so importing an export
//! gives back identical tones. The scl form is for synthesizers: cents of each
//! degree's magnitude, which is the only inexact quantity anywhere here.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::gaussian::GaussianInteger;
use crate::pitch::{Pitch, Value};
use crate::radical::RadicalTone;
use crate::scales::{self, GaussSystem, Key, MinorKey, Mode, Scale, ScaleError};
use crate::tone::Tone;

pub const DEFAULT_PRECISION: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExportError {
    #[error("unknown scale family {given:?}; valid families: {}", valid.join(", "))]
    UnknownFamily { given: String, valid: Vec<String> },
    #[error("unknown selector {given:?} for {family}; valid selectors: {}", valid.join(", "))]
    UnknownSelector {
        family: String,
        given: String,
        valid: Vec<String>,
    },
    #[error(transparent)]
    Variant(#[from] ScaleError),
    #[error("import failed: {0}")]
    Import(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Scl,
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Scl => "scl",
            Format::Text => "txt",
        }
    }
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "scl" => Ok(Format::Scl),
            "text" | "txt" => Ok(Format::Text),
            _ => Err(format!("unknown format {s:?}; expected json, csv, scl or text")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExportOptions {
    /// Decimal places for cents.
    pub precision: usize,
    /// Annotate each note with its argument in degrees. Never changes cents.
    pub phase_note: bool,
}

impl Default for ExportOptions {
    fn default() -> Self {
        ExportOptions {
            precision: DEFAULT_PRECISION,
            phase_note: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoteEntry {
    pub name: String,
    pub value: Value,
}

/// A named, exact note table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuningTable {
    pub family: String,
    pub selector: String,
    pub variant: usize,
    pub notes: Vec<NoteEntry>,
}

fn argument_degrees(v: &Value) -> f64 {
    match v {
        Value::Tone(t) => t.argument_degrees(),
        Value::Radical(_) => 0.0,
    }
}

fn round_to(x: f64, precision: usize) -> f64 {
    let s = format!("{:.*}", precision, x);
    s.parse().expect("formatted float")
}

impl TuningTable {
    pub fn from_scale<T: Pitch>(family: &str, selector: &str, variant: usize, s: &Scale<T>) -> Self {
        TuningTable {
            family: family.to_string(),
            selector: selector.to_string(),
            variant,
            notes: s
                .note_names
                .iter()
                .zip(&s.notes)
                .map(|(n, v)| NoteEntry {
                    name: n.clone(),
                    value: v.clone().into_value().normalized(),
                })
                .collect(),
        }
    }

    pub fn values(&self) -> Vec<Value> {
        self.notes.iter().map(|n| n.value.clone()).collect()
    }

    /// Degrees relative to the first note, for the scl form.
    pub fn degrees(&self) -> Vec<Value> {
        let Some(root) = self.notes.first() else {
            return Vec::new();
        };
        self.notes
            .iter()
            .map(|n| divide(&n.value, &root.value))
            .collect()
    }

    pub fn render(&self, format: Format, opts: ExportOptions) -> String {
        match format {
            Format::Json => self.to_json(opts),
            Format::Csv => self.to_csv(opts),
            Format::Scl => self.to_scl(opts),
            Format::Text => self.to_text(opts),
        }
    }

    pub fn to_json(&self, opts: ExportOptions) -> String {
        let doc = Document {
            scale: ScaleDoc {
                family: self.family.clone(),
                selector: self.selector.clone(),
                variant: self.variant,
                notes: self
                    .notes
                    .iter()
                    .map(|n| NoteDoc {
                        name: n.name.clone(),
                        exact: Exact::of(&n.value),
                        magnitude: n.value.magnitude(),
                        cents: round_to(n.value.cents(), opts.precision),
                        phase_degrees: opts
                            .phase_note
                            .then(|| round_to(argument_degrees(&n.value), opts.precision)),
                    })
                    .collect(),
            },
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<TuningTable, ExportError> {
        let doc: Document =
            serde_json::from_str(text).map_err(|e| ExportError::Import(e.to_string()))?;
        let notes = doc
            .scale
            .notes
            .into_iter()
            .map(|n| {
                Ok(NoteEntry {
                    value: n.exact.to_value()?,
                    name: n.name,
                })
            })
            .collect::<Result<Vec<_>, ExportError>>()?;
        Ok(TuningTable {
            family: doc.scale.family,
            selector: doc.scale.selector,
            variant: doc.scale.variant,
            notes,
        })
    }

    pub fn to_csv(&self, opts: ExportOptions) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![
            "family", "selector", "variant", "name", "kind", "re", "im", "den", "exp2", "exp3",
            "exp5", "exact", "magnitude", "cents",
        ];
        if opts.phase_note {
            header.push("phase_degrees");
        }
        w.write_record(&header).expect("in-memory write");
        for n in &self.notes {
            let exact = Exact::of(&n.value);
            let mut row = vec![
                self.family.clone(),
                self.selector.clone(),
                self.variant.to_string(),
                n.name.clone(),
            ];
            match &exact {
                Exact::Gaussian { num, den } => {
                    row.extend([
                        "gaussian".into(),
                        num[0].0.to_string(),
                        num[1].0.to_string(),
                        den.0.to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                    ]);
                }
                Exact::Radical { exponents } => {
                    row.extend(["radical".into(), String::new(), String::new(), String::new()]);
                    row.extend(exponents.iter().map(|[p, q]| format!("{}/{}", p, q)));
                }
            }
            row.push(n.value.to_string());
            row.push(format!("{:.12}", n.value.magnitude()));
            row.push(format!("{:.*}", opts.precision, n.value.cents()));
            if opts.phase_note {
                row.push(format!("{:.*}", opts.precision, argument_degrees(&n.value)));
            }
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 fields")
    }

    pub fn from_csv(text: &str) -> Result<TuningTable, ExportError> {
        let bad = |m: String| ExportError::Import(m);
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let headers = r.headers().map_err(|e| bad(e.to_string()))?.clone();
        let col = |name: &str| {
            headers
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| bad(format!("missing column {name:?}")))
        };
        let idx: Vec<usize> = [
            "family", "selector", "variant", "name", "kind", "re", "im", "den", "exp2", "exp3",
            "exp5", "exact",
        ]
        .iter()
        .map(|c| col(c))
        .collect::<Result<_, _>>()?;
        let mut table = TuningTable {
            family: String::new(),
            selector: String::new(),
            variant: 0,
            notes: Vec::new(),
        };
        for rec in r.records() {
            let rec = rec.map_err(|e| bad(e.to_string()))?;
            let f = |i: usize| rec.get(idx[i]).unwrap_or("");
            table.family = f(0).to_string();
            table.selector = f(1).to_string();
            table.variant = f(2).parse().map_err(|_| bad(format!("bad variant {:?}", f(2))))?;
            let int = |s: &str| {
                BigInt::from_str(s)
                    .map(Int)
                    .map_err(|_| bad(format!("bad integer {s:?}")))
            };
            let ratio = |s: &str| -> Result<[i64; 2], ExportError> {
                let (p, q) = s.split_once('/').unwrap_or((s, "1"));
                match (p.parse(), q.parse()) {
                    (Ok(p), Ok(q)) => Ok([p, q]),
                    _ => Err(bad(format!("bad exponent {s:?}"))),
                }
            };
            let exact = match f(4) {
                "gaussian" => Exact::Gaussian {
                    num: [int(f(5))?, int(f(6))?],
                    den: int(f(7))?,
                },
                "radical" => Exact::Radical {
                    exponents: [ratio(f(8))?, ratio(f(9))?, ratio(f(10))?],
                },
                k => return Err(bad(format!("unknown kind {k:?}"))),
            };
            let value = exact.to_value()?;
            // The text column is redundant; a disagreement means a damaged file.
            let text = crate::expr::eval_str(f(11)).map_err(|e| bad(e.to_string()))?;
            if text != value {
                return Err(bad(format!("{}: exact text disagrees with components", f(3))));
            }
            table.notes.push(NoteEntry {
                name: f(3).to_string(),
                value,
            });
        }
        Ok(table)
    }

    /// Scala tuning: description, degree count, then one line per degree
    /// above the root, ending with the octave.
    pub fn to_scl(&self, opts: ExportOptions) -> String {
        let degrees = self.degrees();
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{} {} variant {}: cents of note magnitudes",
            self.family, self.selector, self.variant
        );
        let _ = writeln!(s, "{}", degrees.len().saturating_sub(1));
        for d in degrees.iter().skip(1) {
            if *d == Value::Tone(Tone::two()) {
                s.push_str("2/1\n");
            } else {
                let mut c = format!("{:.*}", opts.precision, d.cents());
                if !c.contains('.') {
                    c.push('.');
                }
                s.push_str(&c);
                s.push('\n');
            }
        }
        if opts.phase_note {
            for n in &self.notes {
                let _ = writeln!(
                    s,
                    "! {} argument {:.*} degrees",
                    n.name,
                    opts.precision,
                    argument_degrees(&n.value)
                );
            }
        }
        s
    }

    pub fn to_text(&self, opts: ExportOptions) -> String {
        let mut s = format!("{} {} variant {}\n", self.family, self.selector, self.variant);
        let width = self
            .notes
            .iter()
            .map(|n| n.value.to_string().chars().count())
            .max()
            .unwrap_or(0);
        for n in &self.notes {
            let exact = n.value.to_string();
            let pad = width - exact.chars().count();
            let _ = write!(
                s,
                "{:<3} {}{} {:>12.9} {:>w$.p$}",
                n.name,
                exact,
                " ".repeat(pad),
                n.value.magnitude(),
                n.value.cents(),
                w = opts.precision + 6,
                p = opts.precision,
            );
            if opts.phase_note {
                let _ = write!(s, "  arg {:.*}°", opts.precision, argument_degrees(&n.value));
            }
            s.push('\n');
        }
        s
    }
}

fn divide(a: &Value, b: &Value) -> Value {
    match (a, b) {
        (Value::Tone(x), Value::Tone(y)) => Value::Tone(x / y),
        _ => {
            let r = |v: &Value| match v {
                Value::Radical(r) => *r,
                Value::Tone(t) => crate::radical::magnitude_radical(t).expect("five-limit"),
            };
            Value::from(r(a) * r(b).inv())
        }
    }
}

/// A big integer that serializes as a JSON number when it fits in 64 bits.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Int(BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            I(i64),
            U(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::I(v) => Ok(Int(v.into())),
            Raw::U(v) => Ok(Int(v.into())),
            Raw::S(s) => BigInt::from_str(&s)
                .map(Int)
                .map_err(|_| serde::de::Error::custom(format!("bad integer {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Exact {
    /// `(num[0] + num[1] i) / den`.
    Gaussian { num: [Int; 2], den: Int },
    /// Exponents of 2, 3, 5 as `[numerator, denominator]`.
    Radical { exponents: [[i64; 2]; 3] },
}

impl Exact {
    fn of(v: &Value) -> Exact {
        match v {
            Value::Tone(t) => Exact::Gaussian {
                num: [Int(t.num().re.clone()), Int(t.num().im.clone())],
                den: Int(t.den().clone()),
            },
            Value::Radical(r) => Exact::Radical {
                exponents: [0, 1, 2].map(|i| {
                    let (n, d) = r.exponent(i);
                    [n, d]
                }),
            },
        }
    }

    fn to_value(&self) -> Result<Value, ExportError> {
        match self {
            Exact::Gaussian { num, den } => {
                if den.0.is_zero() || (num[0].0.is_zero() && num[1].0.is_zero()) {
                    return Err(ExportError::Import("zero in a gaussian value".into()));
                }
                let g = GaussianInteger::new(num[0].0.clone(), num[1].0.clone());
                let t = Tone::new(g, GaussianInteger::real(den.0.clone()))
                    .map_err(|e| ExportError::Import(e.to_string()))?;
                // Only the reduced form is an export; anything else was edited.
                if t.num().re != num[0].0 || t.num().im != num[1].0 || *t.den() != den.0 {
                    return Err(ExportError::Import(format!("{} is not in lowest terms", t)));
                }
                Ok(Value::Tone(t))
            }
            Exact::Radical { exponents } => {
                let e = exponents.map(|[n, d]| (n, d));
                let r = RadicalTone::from_rationals(e)
                    .ok_or_else(|| ExportError::Import("exponent off the twelfths lattice".into()))?;
                Ok(Value::from(r))
            }
        }
    }
}

/// The exact payload used in scale exports, for other JSON outputs.
pub fn exact_json(v: &Value) -> serde_json::Value {
    serde_json::to_value(Exact::of(v)).expect("plain data")
}

#[derive(Debug, Serialize, Deserialize)]
struct Document {
    scale: ScaleDoc,
}

#[derive(Debug, Serialize, Deserialize)]
struct ScaleDoc {
    family: String,
    selector: String,
    variant: usize,
    notes: Vec<NoteDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
struct NoteDoc {
    name: String,
    exact: Exact,
    magnitude: f64,
    cents: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phase_degrees: Option<f64>,
}

pub const SCALE_FAMILIES: [&str; 7] = [
    "just",
    "pythagorean",
    "equal",
    "gauss3",
    "gauss2",
    "shadow3",
    "shadow2",
];

/// Selectors for a family, in display order.
pub fn selectors(family: &str) -> Option<Vec<String>> {
    let own = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    Some(match family {
        "just" => {
            let mut v = own(&["diatonic", "chromatic"]);
            v.extend(Mode::ALL.iter().map(|m| m.name().to_string()));
            v
        }
        "pythagorean" => own(&["chromatic", "pentatonic", "heptatonic"]),
        "equal" => own(&["chromatic"]),
        "gauss3" => {
            let mut v = own(&["I", "II", "III", "phased"]);
            v.extend(Key::ALL.iter().map(|k| format!("major-{}", k.name())));
            v.extend(MinorKey::ALL.iter().map(|k| format!("minor-{}", k.name())));
            v
        }
        "gauss2" => own(&["chromatic"]),
        "shadow3" => own(&["I", "II", "III"]),
        "shadow2" => own(&["I", "II"]),
        _ => return None,
    })
}

/// Number of variants behind a selector; the phased row has one per phase
/// `k = 0, 1, -1, …` with `|k| ≤ k_bound`.
pub fn variant_count(family: &str, selector: &str, k_bound: u32) -> usize {
    match (family, selector.to_ascii_uppercase().as_str()) {
        ("gauss3", "PHASED") => 2 * k_bound as usize + 1,
        ("gauss3", s) => GaussSystem::from_name(s).map_or(1, |g| g.variant_count()),
        ("gauss2", _) => 2,
        ("shadow3", "I") => 1,
        ("shadow3", _) => 2,
        ("shadow2", "I") => 2,
        _ => 1,
    }
}

/// The phase for variant index `v` in the order `0, 1, -1, 2, -2, …`.
pub fn phase_of_variant(v: usize) -> i64 {
    let m = v.div_ceil(2) as i64;
    if v % 2 == 1 {
        m
    } else {
        -m
    }
}

fn single(family: &str, selector: &str, variant: usize) -> Result<(), ExportError> {
    if variant == 0 {
        Ok(())
    } else {
        Err(ScaleError::InvalidVariant {
            family: format!("{family} {selector}"),
            variant,
            count: 1,
        }
        .into())
    }
}

/// Build the table named by `family`, `selector` and `variant`.
pub fn resolve_scale(
    family: &str,
    selector: &str,
    variant: usize,
    k_bound: u32,
) -> Result<TuningTable, ExportError> {
    let family_key = family.to_ascii_lowercase();
    let Some(valid) = selectors(&family_key) else {
        return Err(ExportError::UnknownFamily {
            given: family.to_string(),
            valid: SCALE_FAMILIES.iter().map(|s| s.to_string()).collect(),
        });
    };
    let unknown = || ExportError::UnknownSelector {
        family: family_key.clone(),
        given: selector.to_string(),
        valid: valid.clone(),
    };
    let sel = valid
        .iter()
        .find(|v| v.eq_ignore_ascii_case(selector))
        .cloned()
        .ok_or_else(unknown)?;
    let table = |s: &Scale<Tone>| TuningTable::from_scale(&family_key, &sel, variant, s);
    let radical = |s: &Scale<RadicalTone>| TuningTable::from_scale(&family_key, &sel, variant, s);
    let system = || GaussSystem::from_name(&sel).ok_or_else(unknown);
    Ok(match family_key.as_str() {
        "just" => {
            single(&family_key, &sel, variant)?;
            match sel.as_str() {
                "diatonic" => table(&scales::just_diatonic()),
                "chromatic" => table(&scales::just_chromatic()),
                m => table(&scales::modal_scale(Mode::from_name(m).ok_or_else(unknown)?)),
            }
        }
        "pythagorean" => {
            single(&family_key, &sel, variant)?;
            table(&match sel.as_str() {
                "chromatic" => scales::pythagorean_chromatic(),
                "pentatonic" => scales::pentatonic(),
                _ => scales::heptatonic(),
            })
        }
        "equal" => {
            single(&family_key, &sel, variant)?;
            radical(&scales::equal_tempered_chromatic())
        }
        "gauss3" => {
            if let Some(k) = sel.strip_prefix("major-") {
                single(&family_key, &sel, variant)?;
                table(&scales::gauss3_major(Key::from_name(k).ok_or_else(unknown)?))
            } else if let Some(k) = sel.strip_prefix("minor-") {
                single(&family_key, &sel, variant)?;
                table(&scales::minor_scale(MinorKey::from_name(k).ok_or_else(unknown)?))
            } else if sel == "phased" {
                let count = variant_count("gauss3", "phased", k_bound);
                if variant >= count {
                    return Err(ScaleError::InvalidVariant {
                        family: "gauss3 phased".into(),
                        variant,
                        count,
                    }
                    .into());
                }
                table(&scales::gauss3_phased(phase_of_variant(variant)))
            } else {
                table(&scales::gauss3_chromatic(system()?, variant)?)
            }
        }
        "gauss2" => table(&scales::gauss2_chromatic(variant)?),
        "shadow3" => radical(&scales::shadow3_chromatic(system()?, variant)?),
        _ => radical(&scales::shadow2_chromatic(system()?, variant)?),
    })
}

/// Every exportable table, in family and selector order.
pub fn all_tables(k_bound: u32) -> Vec<TuningTable> {
    let mut out = Vec::new();
    for fam in SCALE_FAMILIES {
        for sel in selectors(fam).expect("listed family") {
            for v in 0..variant_count(fam, &sel, k_bound) {
                out.push(resolve_scale(fam, &sel, v, k_bound).expect("listed selector"));
            }
        }
    }
    out
}

/// File name for a table, without directory.
pub fn file_name(t: &TuningTable, format: Format) -> String {
    let sel: String = t
        .selector
        .chars()
        .map(|c| match c {
            '#' => 's',
            c if c.is_ascii_alphanumeric() || c == '-' => c,
            _ => '_',
        })
        .collect();
    format!("{}-{}-{}.{}", t.family, sel, t.variant, format.extension())
}

/// Whether a JSON or CSV payload reproduces `t` exactly.
pub fn round_trips(t: &TuningTable) -> bool {
    let opts = ExportOptions::default();
    let json = TuningTable::from_json(&t.to_json(opts));
    let csv = TuningTable::from_csv(&t.to_csv(opts));
    json.as_ref() == Ok(t) && csv.as_ref() == Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss3_i() -> TuningTable {
        resolve_scale("gauss3", "I", 0, 2).unwrap()
    }

    #[test]
    fn json_shape_and_round_trip() {
        let t = gauss3_i();
        let j = t.to_json(ExportOptions::default());
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        let n = &v["scale"]["notes"][1];
        assert_eq!(n["name"], "C♯");
        assert_eq!(n["exact"]["kind"], "gaussian");
        assert_eq!(n["exact"]["num"], serde_json::json!([3, 3]));
        assert_eq!(n["exact"]["den"], 4);
        assert_eq!(v["scale"]["notes"][6]["cents"], 600.0);
        assert_eq!(TuningTable::from_json(&j).unwrap(), t);
    }

    #[test]
    fn every_table_round_trips() {
        for t in all_tables(2) {
            assert!(round_trips(&t), "{} {} {}", t.family, t.selector, t.variant);
        }
    }

    #[test]
    fn csv_rejects_tampering() {
        let t = gauss3_i();
        let csv = t.to_csv(ExportOptions::default());
        let bad = csv.replacen(",(3+3i)/4,", ",(3+3i)/5,", 1);
        assert!(TuningTable::from_csv(&bad).is_err());
    }

    #[test]
    fn scl_layout() {
        let t = resolve_scale("just", "diatonic", 0, 2).unwrap();
        let s = t.to_scl(ExportOptions::default());
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[1], "7");
        assert_eq!(lines[2], "203.910002");
        assert_eq!(lines[5], "701.955001");
        assert_eq!(*lines.last().unwrap(), "2/1");
    }

    #[test]
    fn phase_note_does_not_touch_cents() {
        let t = gauss3_i();
        let plain = t.to_scl(ExportOptions::default());
        let noted = t.to_scl(ExportOptions {
            phase_note: true,
            ..Default::default()
        });
        assert!(noted.starts_with(&plain));
        assert!(noted.contains("! F♯ argument 45.000000 degrees"));
    }

    #[test]
    fn selector_errors_list_choices() {
        let e = resolve_scale("gauss3", "IV", 0, 2).unwrap_err();
        assert!(e.to_string().contains("I, II, III"));
        assert!(resolve_scale("lydian", "x", 0, 2).is_err());
        assert!(resolve_scale("gauss3", "II", 4, 2).is_err());
        assert_eq!(resolve_scale("gauss3", "phased", 4, 2).unwrap().variant, 4);
    }

    #[test]
    fn phase_order() {
        let ks: Vec<i64> = (0..5).map(phase_of_variant).collect();
        assert_eq!(ks, vec![0, 1, -1, 2, -2]);
    }
}

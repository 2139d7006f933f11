use maxrep_core::currents::{multicurve_certificate, period_via_length, CurrentClassification};
use maxrep_core::fields::{Field, RatFunc};
use maxrep_core::linalg::{crossratio, maslov_full, Matrix, SymplecticForm};
use maxrep_core::reps::{
    closed_point_verdict, pants_cusp_framing, reduced_words_up_to, verify_maximal_framing, ClosedPointVerdict,
    FramingViolation, GroupPresentation, RepTable, SweepOptions, Word,
};
use maxrep_core::spectra::{building_pseudodistance, jordan_valuation, translation_length, JordanMode};
use maxrep_core::Error;
use serde_json::{json, Value as Json};

use crate::input::{self, Input};
use crate::{CliError, Command, Flags};

/// Words shown by `pants-demo`.
pub const PANTS_WORDS: [&str; 6] = ["c1", "c2", "c3", "c1 c2^-1", "c1^-1 c3", "c2 c3^-1"];

pub const DEFAULT_MAX_LENGTH: usize = 4;
pub const DEMO_MAX_LENGTH: usize = 3;

pub const PANTS_TRACE_WORD: &str = "(c1^-1 c3)^2";

pub fn dispatch(command: Command, flags: &Flags) -> Result<Json, CliError> {
    if command == Command::PantsDemo {
        return pants_demo(flags);
    }
    let input = input::load(&flags.input)?;
    match command {
        Command::PantsDemo => unreachable!(),
        Command::SymplecticCheck => symplectic_check(&input),
        Command::Trace => trace(&input, flags),
        Command::Translength => lengths(&input, flags, false),
        Command::Jordan => lengths(&input, flags, true),
        Command::ClosedPoint => {
            let rep = input.representation(&flags.order, &flags.valuation()?)?;
            Ok(verdict_json(&rep, &closed_point_verdict(&rep, &sweep(flags))?))
        }
        Command::Maslov => {
            let l = input.lagrangians(3)?;
            let m = maslov_full(&l[0], &l[1], &l[2], &flags.order)?;
            Ok(json!({"index": m.index.to_string(), "radical": m.radical, "n": l[0].n()}))
        }
        Command::Crossratio => {
            let l = input.lagrangians(4)?;
            let cr = crossratio(&l[0], &l[1], &l[2], &l[3])?;
            Ok(json!({"crossratio": cr.to_string(), "valuation": cr.nu(&flags.valuation()?).to_string()}))
        }
        Command::Maximality => maximality(&input, flags),
        Command::Periods => {
            let rep = input.representation(&flags.order, &flags.valuation()?)?;
            let table = words(&rep, flags)?
                .iter()
                .map(|w| {
                    let p = period_via_length(&rep, w, flags.norm)?;
                    Ok(json!({
                        "word": show(&rep, w),
                        "period": p.period.to_string(),
                        "method": p.method.to_string(),
                    }))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(json!({ "periods": table }))
        }
        Command::Multicurve => {
            let rep = input.representation(&flags.order, &flags.valuation()?)?;
            multicurve(&rep, flags, flags.max_length.unwrap_or(DEFAULT_MAX_LENGTH))
        }
        Command::Distance => {
            let m = input.matrices(Some(2))?;
            let d = building_pseudodistance(&m[0], &m[1], &flags.valuation()?, flags.norm)?;
            Ok(json!({ "distance": d.to_string() }))
        }
    }
}

fn sweep(flags: &Flags) -> SweepOptions {
    SweepOptions {
        radius: flags.radius,
        degree_bound: flags.degree_bound,
        norm: flags.norm,
    }
}

fn show(rep: &RepTable<RatFunc>, w: &Word) -> String {
    rep.presentation().show(w)
}

/// The `--word` list, or every reduced word up to `--max-length`.
fn words(rep: &RepTable<RatFunc>, flags: &Flags) -> Result<Vec<Word>, CliError> {
    if flags.words.is_empty() {
        let k = rep.presentation().generators.len();
        Ok(reduced_words_up_to(k, flags.max_length.unwrap_or(DEFAULT_MAX_LENGTH))
            .into_iter()
            .filter(|w| !w.is_empty())
            .collect())
    } else {
        flags
            .words
            .iter()
            .map(|w| parse_word(rep.presentation(), w))
            .collect()
    }
}

/// Words as `c1 c2^-1`, with `(…)^k` accepted for a parenthesized power.
fn parse_word(p: &GroupPresentation, text: &str) -> Result<Word, CliError> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix('(') {
        if let Some((inner, exp)) = rest.rsplit_once(")^") {
            let k: i64 = exp
                .trim()
                .parse()
                .map_err(|_| CliError::Input(Error::Schema(format!("bad exponent in `{t}`"))))?;
            return Ok(p.parse_word(inner).map_err(CliError::Input)?.pow(k));
        }
    }
    p.parse_word(t).map_err(CliError::Input)
}

pub fn verdict_json(rep: &RepTable<RatFunc>, v: &ClosedPointVerdict) -> Json {
    match v {
        ClosedPointVerdict::Closed { witness, length } => json!({
            "verdict": "Closed",
            "witness": show(rep, witness),
            "length": length.to_string(),
        }),
        ClosedPointVerdict::NotClosedIntegral { certificate } => json!({
            "verdict": "NotClosedIntegral",
            "certificate": certificate.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
        ClosedPointVerdict::Unknown { radius } => json!({"verdict": "Unknown", "radius": radius}),
    }
}

fn symplectic_check(input: &Input) -> Result<Json, CliError> {
    match input {
        Input::Matrices(ms) => {
            let checks = ms
                .iter()
                .map(|m| {
                    if m.rows() != m.cols() || m.rows() % 2 != 0 {
                        return Err(CliError::Input(Error::Dimension("need a square matrix of even size".into())));
                    }
                    Ok(json!(SymplecticForm::new(m.rows() / 2).is_symplectic(m)?))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(json!({ "symplectic": checks }))
        }
        Input::Pants | Input::Representation(_) => {
            let (pres, images) = match input {
                Input::Representation(r) => (r.presentation()?, r.matrices()?),
                _ => (GroupPresentation::pants(), maxrep_core::reps::pants::pants_images().to_vec()),
            };
            relation_report(&pres, &images)
        }
        Input::Lagrangians(_) => Err(CliError::Input(Error::Schema("expected matrices or a representation".into()))),
    }
}

/// Symplecticity of each image and the value of each relator, computed from
/// the raw images.
fn relation_report(pres: &GroupPresentation, images: &[Matrix<RatFunc>]) -> Result<Json, CliError> {
    let dim = images.first().map_or(0, Matrix::rows);
    if !dim.is_multiple_of(2) || images.iter().any(|m| m.rows() != dim || m.cols() != dim) {
        return Err(CliError::Input(Error::Dimension("images must be square of one even size".into())));
    }
    let form = SymplecticForm::new(dim / 2);
    let mut generators = Vec::new();
    for (name, m) in pres.generators.iter().zip(images) {
        generators.push(json!({"generator": name, "symplectic": form.is_symplectic(m)?}));
    }
    let mut relators = Vec::new();
    for r in &pres.relators {
        let mut acc = Matrix::identity(dim);
        for l in r.letters() {
            let g = &images[l.generator];
            let g = if l.inverse { g.inverse()? } else { g.clone() };
            acc = &acc * &g;
        }
        let value = if acc.is_identity() {
            "identity"
        } else if (-&acc).is_identity() {
            "minus_identity"
        } else {
            "other"
        };
        relators.push(json!({"relator": pres.show(r), "value": value}));
    }
    Ok(json!({"generators": generators, "relators": relators}))
}

fn trace(input: &Input, flags: &Flags) -> Result<Json, CliError> {
    let rep = input.representation(&flags.order, &flags.valuation()?)?;
    let rows: Vec<Json> = words(&rep, flags)?
        .iter()
        .map(|w| {
            let t = rep.trace(w);
            json!({
                "word": show(&rep, w),
                "trace": t.to_string(),
                "valuation": t.nu(rep.val()).to_string(),
            })
        })
        .collect();
    Ok(json!({ "traces": rows }))
}

fn length_entry(m: &Matrix<RatFunc>, flags: &Flags, jordan: bool) -> Result<Json, CliError> {
    let val = flags.valuation()?;
    if jordan {
        let mode: JordanMode = flags.mode.into();
        let j = jordan_valuation(m, &val, mode)?;
        Ok(json!(j.entries().iter().map(ToString::to_string).collect::<Vec<_>>()))
    } else {
        Ok(json!(translation_length(m, &val, flags.norm)?.to_string()))
    }
}

fn lengths(input: &Input, flags: &Flags, jordan: bool) -> Result<Json, CliError> {
    let key = if jordan { "jordan" } else { "length" };
    let rows = match input {
        Input::Matrices(ms) => ms
            .iter()
            .enumerate()
            .map(|(i, m)| Ok(json!({"matrix": i, key: length_entry(m, flags, jordan)?})))
            .collect::<Result<Vec<_>, CliError>>()?,
        _ => {
            let rep = input.representation(&flags.order, &flags.valuation()?)?;
            words(&rep, flags)?
                .iter()
                .map(|w| Ok(json!({"word": show(&rep, w), key: length_entry(&rep.evaluate(w), flags, jordan)?})))
                .collect::<Result<Vec<_>, CliError>>()?
        }
    };
    Ok(json!({ "entries": rows }))
}

fn maximality(input: &Input, flags: &Flags) -> Result<Json, CliError> {
    let rep = input.representation(&flags.order, &flags.valuation()?)?;
    let framing = match input {
        Input::Representation(r) => r
            .framing_table()?
            .ok_or_else(|| CliError::Input(Error::Schema("the representation has no `framing`".into())))?,
        _ => pants_cusp_framing(&rep, flags.framing_radius)?,
    };
    let report = verify_maximal_framing(&rep, &framing)?;
    let violation = report.violation.as_ref().map(|v| match v {
        FramingViolation::NotMaximal { triple, maslov } => {
            json!({"kind": "not_maximal", "triple": triple, "maslov": maslov.to_string()})
        }
        FramingViolation::NotEquivariant { word, from, to } => {
            json!({"kind": "not_equivariant", "word": word, "from": from, "to": to})
        }
        FramingViolation::OrderNotPreserved { word, triple } => {
            json!({"kind": "order_not_preserved", "word": word, "triple": triple})
        }
    });
    Ok(json!({
        "labels": framing.labels(),
        "triples_checked": report.triples_checked,
        "symmetry_checks": report.symmetry_checks,
        "maximal": report.is_maximal(),
        "violation": violation,
    }))
}

fn multicurve(rep: &RepTable<RatFunc>, flags: &Flags, max_length: usize) -> Result<Json, CliError> {
    let k = rep.presentation().generators.len();
    let ws: Vec<Word> = reduced_words_up_to(k, max_length)
        .into_iter()
        .filter(|w| !w.is_empty())
        .collect();
    let report = multicurve_certificate(rep, &ws, flags.kmax, flags.norm)?;
    let (classification, k) = match report.classification {
        CurrentClassification::MulticurveCertified(k) => ("MulticurveCertified", Some(k)),
        CurrentClassification::DiscretenessUnknown => ("DiscretenessUnknown", None),
    };
    let residues: Vec<Json> = report
        .periods
        .iter()
        .zip(report.residues.iter().map(Some).chain(std::iter::repeat(None)))
        .map(|(p, r)| {
            json!({
                "word": show(rep, &p.word),
                "period": p.period.to_string(),
                "scaled": r.map(ToString::to_string),
                "integral": r.map(|r| r.is_integer()),
            })
        })
        .collect();
    Ok(json!({
        "classification": classification,
        "K": k,
        "kmax": flags.kmax,
        "max_length": max_length,
        "words": ws.len(),
        "residues": residues,
    }))
}

fn pants_demo(flags: &Flags) -> Result<Json, CliError> {
    let val = flags.valuation()?;
    let pres = GroupPresentation::pants();
    let images = maxrep_core::reps::pants::pants_images();
    let relations = relation_report(&pres, &images)?;
    let rep = RepTable::new(pres.clone(), images.to_vec(), flags.order.clone(), val).map_err(CliError::Input)?;
    let trace = rep.trace(&parse_word(&pres, PANTS_TRACE_WORD)?);
    let verdict = closed_point_verdict(&rep, &sweep(flags))?;
    let jordan = PANTS_WORDS
        .iter()
        .map(|w| {
            let g = rep.evaluate(&parse_word(&pres, w)?);
            let j = jordan_valuation(&g, rep.val(), JordanMode::Symplectic)?;
            Ok(json!({"word": w, "jordan": j.entries().iter().map(ToString::to_string).collect::<Vec<_>>()}))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let certificate = multicurve(&rep, flags, flags.max_length.unwrap_or(DEMO_MAX_LENGTH))?;
    Ok(json!({
        "relations": relations,
        "trace": {"word": PANTS_TRACE_WORD, "value": trace.to_string()},
        "closed_point": verdict_json(&rep, &verdict),
        "jordan": jordan,
        "multicurve": {
            "classification": certificate["classification"],
            "K": certificate["K"],
            "words": certificate["words"],
            "max_length": certificate["max_length"],
        },
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pants() -> GroupPresentation {
        let gens = ["c1", "c2", "c3"].map(String::from).to_vec();
        GroupPresentation::new(gens, vec![], vec![]).unwrap()
    }

    #[test]
    fn parenthesized_powers() {
        let p = pants();
        let w = parse_word(&p, "(c1^-1 c3)^2").unwrap();
        assert_eq!(w, p.parse_word("c1^-1 c3 c1^-1 c3").unwrap());
        let inv = parse_word(&p, " (c1 c2)^-1 ").unwrap();
        assert_eq!(inv, p.parse_word("c2^-1 c1^-1").unwrap());
        assert_eq!(parse_word(&p, "c1 c2^-1").unwrap(), p.parse_word("c1 c2^-1").unwrap());
    }

    #[test]
    fn malformed_words_are_input_errors() {
        let p = pants();
        for bad in ["(c1 c2)^x", "c4", "(c1 c9)^2"] {
            assert!(matches!(parse_word(&p, bad), Err(CliError::Input(_))), "{bad}");
        }
    }
}

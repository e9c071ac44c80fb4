use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::str::FromStr;

use kbinomial::automaticity::{
    approx_nerode_count, build_slice, words_up_to, LanguageKind, NerodeConvention,
};
use kbinomial::census::{
    cake_count, census, check_growth_bounds, count_classes, extrapolate_polynomial, f_parikh_k,
    ll_language, sing_language,
};
use kbinomial::classgen::{class2, class2_with_tree, exchange_trace};
use kbinomial::equivalence::{equivalent, parikh_matrix, switch_class};
use kbinomial::nil2::{nil_normal_form, phi, phi_index, SignedWord};
use kbinomial::singletons::{
    check_prop54, is_singleton, letter_factorization, minimal_sequence, power_tower_sequence, rho,
    validate_sequence, GrowthSequence,
};
use kbinomial::{binom_big, signature, Alphabet, Budget, ParikhVector, RleWord, Word};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::Report;
use crate::{CensusArgs, Command, Convention, Kind, SequenceArgs, SequenceChoice, WordArgs};

const PHI_NOTE: &str =
    "equal coordinates are necessary for equality in the free nil-2 group; sufficiency is only established for words without inverse letters";
const BOUND_NOTE: &str =
    "upper bound is prod (x_a*x_b + 1); the product prod x_a*x_b is reported for comparison and already fails at x = (2,2)";

type Out = Result<Report, CliError>;

fn alphabet(m: usize) -> Result<Alphabet, CliError> {
    Ok(Alphabet::new(m)?)
}

fn word(text: &str, m: usize) -> Result<Word, CliError> {
    Ok(Word::parse(text, alphabet(m)?)?)
}

fn parikh(text: &str) -> Result<ParikhVector, CliError> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let counts = inner
        .split(',')
        .map(|c| {
            c.trim().parse::<u64>().map_err(|_| {
                CliError::Input(format!(
                    "invalid Parikh vector {text:?}: {c:?} is not a count"
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ParikhVector::new(counts)?)
}

fn big(text: &str, what: &str) -> Result<BigUint, CliError> {
    BigUint::from_str(text.trim()).map_err(|_| {
        CliError::Input(format!(
            "invalid {what} {text:?}: expected a non-negative integer"
        ))
    })
}

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
fn big_json(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn words_json<'a>(words: impl IntoIterator<Item = &'a Word>) -> Value {
    Value::Array(words.into_iter().map(|w| json!(w.to_string())).collect())
}

fn word_rows<'a>(words: impl IntoIterator<Item = &'a Word>) -> Vec<Vec<String>> {
    words.into_iter().map(|w| vec![w.to_string()]).collect()
}

fn lines<'a>(words: impl IntoIterator<Item = &'a Word>) -> String {
    words
        .into_iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn label(x: &[u8]) -> String {
    if x.iter().all(|&a| a <= 9) {
        x.iter().map(|a| a.to_string()).collect()
    } else {
        x.iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn runs_json(r: &RleWord) -> Value {
    Value::Array(
        r.runs()
            .iter()
            .map(|run| json!({"letter": run.letter, "exponent": big_json(&run.exponent)}))
            .collect(),
    )
}

fn runs_rows(r: &RleWord) -> Vec<Vec<String>> {
    r.runs()
        .iter()
        .map(|run| vec![run.letter.to_string(), run.exponent.to_string()])
        .collect()
}

fn sequence(args: &SequenceArgs, needed: usize) -> Result<GrowthSequence, CliError> {
    if let Some(terms) = &args.terms {
        return parse_terms(std::slice::from_ref(terms));
    }
    Ok(match args.sequence {
        SequenceChoice::Minimal => minimal_sequence(needed),
        SequenceChoice::Tower => power_tower_sequence(needed),
    })
}

fn parse_terms(parts: &[String]) -> Result<GrowthSequence, CliError> {
    let mut terms = Vec::new();
    for part in parts {
        for t in part.split([',', ' ']).filter(|t| !t.trim().is_empty()) {
            terms.push(big(t, "sequence term")?);
        }
    }
    Ok(GrowthSequence(terms))
}

fn sequence_json(s: &GrowthSequence) -> Value {
    Value::Array(s.terms().iter().map(big_json).collect())
}

pub fn execute(cmd: &Command, budget: Budget) -> Out {
    match cmd {
        Command::Binom { m, u, v } => cmd_binom(*m, u, v),
        Command::Signature { m, k, word } => cmd_signature(*m, *k, word),
        Command::Equiv { m, k, u, v } => cmd_equiv(*m, *k, u, v),
        Command::ParikhMatrix { m, word } => cmd_parikh_matrix(*m, word),
        Command::SwitchClass(a) => cmd_switch_class(a),
        Command::Class2 { word, tree } => cmd_class2(word, tree.as_deref()),
        Command::Trace(a) => cmd_trace(a),
        Command::Phi(a) => cmd_phi(a),
        Command::NormalForm(a) => cmd_normal_form(a),
        Command::Census { args, classes } => cmd_census(args, *classes, budget),
        Command::Ll(a) => cmd_language(a, Kind::Ll, budget),
        Command::Sing(a) => cmd_language(a, Kind::Sing, budget),
        Command::FParikh { k, parikh } => cmd_f_parikh(*k, parikh, budget),
        Command::Bounds { parikh } => cmd_bounds(parikh, budget),
        Command::Rho { p, n, seq } => cmd_rho(p, *n, seq),
        Command::ValidateSeq { terms } => cmd_validate(terms),
        Command::MinSeq { count } => cmd_min_seq(*count),
        Command::Nb(a) => cmd_nb(a),
        Command::IsSingleton { m, k, word, rho } => {
            cmd_is_singleton(*m, *k, word.as_deref(), rho.as_deref(), budget)
        }
        Command::Prop54 { p, n, seq } => cmd_prop54(p, *n, seq, budget),
        Command::Automaticity {
            kind,
            m,
            k,
            cutoff,
            t,
            convention,
        } => cmd_automaticity(*kind, *m, *k, *cutoff, t.as_deref(), *convention, budget),
        Command::SeedTables => cmd_seed_tables(budget),
    }
}

fn cmd_binom(m: usize, u: &str, v: &str) -> Out {
    let (uw, vw) = (word(u, m)?, word(v, m)?);
    let value = binom_big(uw.letters(), vw.letters());
    Ok(Report::new(
        "binom",
        json!({"m": m, "u": uw.to_string(), "v": vw.to_string()}),
        big_json(&value),
    )
    .human(value.to_string())
    .table(
        vec!["u", "v", "binom"],
        vec![vec![uw.to_string(), vw.to_string(), value.to_string()]],
    ))
}

fn cmd_signature(m: usize, k: usize, text: &str) -> Out {
    let w = word(text, m)?;
    let sig = signature(&w, k)?;
    let index: Vec<String> = words_up_to(w.alphabet(), k)
        .iter()
        .skip(1)
        .map(|x| label(x))
        .collect();
    let coefficients = sig.coefficients();
    let human = index
        .iter()
        .zip(coefficients)
        .map(|(x, c)| format!("{x}\t{c}"))
        .collect::<Vec<_>>()
        .join("\n");
    let rows = index
        .iter()
        .zip(coefficients)
        .map(|(x, c)| vec![x.clone(), c.to_string()])
        .collect();
    Ok(Report::new(
        "signature",
        json!({"m": m, "k": k, "word": w.to_string()}),
        json!({"index": index, "coefficients": coefficients}),
    )
    .human(human)
    .table(vec!["subword", "coefficient"], rows))
}

fn cmd_equiv(m: usize, k: usize, u: &str, v: &str) -> Out {
    let (uw, vw) = (word(u, m)?, word(v, m)?);
    let eq = equivalent(&uw, &vw, k);
    Ok(Report::new(
        "equiv",
        json!({"m": m, "k": k, "u": uw.to_string(), "v": vw.to_string()}),
        json!(eq),
    )
    .human(eq.to_string())
    .table(
        vec!["u", "v", "k", "equivalent"],
        vec![vec![
            uw.to_string(),
            vw.to_string(),
            k.to_string(),
            eq.to_string(),
        ]],
    ))
}

fn cmd_parikh_matrix(m: usize, text: &str) -> Out {
    let w = word(text, m)?;
    let pm = parikh_matrix(&w)?;
    let rows = pm.to_rows();
    let human = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report::new(
        "parikh-matrix",
        json!({"m": m, "word": w.to_string()}),
        json!({"n1": pm.n1, "n2": pm.n2, "c12": pm.c12, "rows": rows}),
    )
    .human(human)
    .table(
        vec!["n1", "n2", "c12"],
        vec![vec![
            pm.n1.to_string(),
            pm.n2.to_string(),
            pm.c12.to_string(),
        ]],
    ))
}

fn cmd_switch_class(a: &WordArgs) -> Out {
    let w = word(&a.word, a.m)?;
    let class = switch_class(&w);
    Ok(Report::new(
        "switch-class",
        json!({"m": a.m, "word": w.to_string()}),
        words_json(&class),
    )
    .human(lines(&class))
    .table(vec!["word"], word_rows(&class)))
}

fn cmd_class2(a: &WordArgs, tree: Option<&std::path::Path>) -> Out {
    let w = word(&a.word, a.m)?;
    let mut inputs = json!({"m": a.m, "word": w.to_string()});
    let class: BTreeSet<Word> = match tree {
        Some(path) => {
            let (class, edges) = class2_with_tree(&w)?;
            let mut out = BufWriter::new(File::create(path)?);
            for e in &edges {
                let rec = json!({"parent": e.parent, "child": e.child, "a": e.a, "b": e.b});
                serde_json::to_writer(&mut out, &rec)?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
            inputs["tree"] = json!(path.display().to_string());
            class
        }
        None => class2(&w)?,
    };
    Ok(Report::new("class2", inputs, words_json(&class))
        .human(lines(&class))
        .table(vec!["word"], word_rows(&class)))
}

fn cmd_trace(a: &WordArgs) -> Out {
    let w = word(&a.word, a.m)?;
    let t = exchange_trace(&w);
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| json!({"position": s.position + 1, "a": s.a, "b": s.b}))
        .collect();
    let mut totals = Vec::new();
    let mut human = Vec::new();
    for a in w.alphabet().letters() {
        for b in w.alphabet().letters().filter(|&b| b > a) {
            totals.push(json!({"a": a, "b": b, "count": t.total(a, b)}));
            human.push(format!(
                "{} -> {}: {}",
                label(&[a, b]),
                label(&[b, a]),
                t.total(a, b)
            ));
        }
    }
    let rows = t
        .steps
        .iter()
        .map(|s| {
            vec![
                (s.position + 1).to_string(),
                s.a.to_string(),
                s.b.to_string(),
            ]
        })
        .collect();
    Ok(Report::new(
        "trace",
        json!({"m": a.m, "word": w.to_string()}),
        json!({"steps": steps, "totals": totals}),
    )
    .human(format!("{} exchanges\n{}", t.steps.len(), human.join("\n")))
    .table(vec!["position", "a", "b"], rows)
    .note("positions are 1-based; a step at position i turns the factor ab at i, i+1 into ba"))
}

fn cmd_phi(a: &WordArgs) -> Out {
    let s = SignedWord::parse(&a.word, alphabet(a.m)?)?;
    let p = phi(&s)?;
    let index: Vec<String> = phi_index(s.alphabet()).iter().map(|x| label(x)).collect();
    let human = index
        .iter()
        .zip(&p.0)
        .map(|(x, v)| format!("{x}\t{v}"))
        .collect::<Vec<_>>()
        .join("\n");
    let rows = index
        .iter()
        .zip(&p.0)
        .map(|(x, v)| vec![x.clone(), v.to_string()])
        .collect();
    Ok(
        Report::new("phi", json!({"m": a.m, "word": s.to_string()}), json!(p.0))
            .human(human)
            .table(vec!["coordinate", "value"], rows)
            .note(format!("coordinate order: {}", index.join(",")))
            .note(PHI_NOTE),
    )
}

fn cmd_normal_form(a: &WordArgs) -> Out {
    let w = word(&a.word, a.m)?;
    let nf = nil_normal_form(&w)?;
    let mut text = Vec::new();
    for (i, &c) in nf.parikh.counts().iter().enumerate() {
        text.push(format!("{}^{c}", i + 1));
    }
    let mut commutators = Vec::new();
    let mut rows = Vec::new();
    for (&(b, a), &e) in &nf.exponents {
        text.push(format!("[{b},{a}]^{e}"));
        commutators.push(json!({"b": b, "a": a, "exponent": e}));
        rows.push(vec![b.to_string(), a.to_string(), e.to_string()]);
    }
    Ok(Report::new(
        "normal-form",
        json!({"m": a.m, "word": w.to_string()}),
        json!({"parikh": nf.parikh.counts(), "commutators": commutators}),
    )
    .human(text.join(" "))
    .table(vec!["b", "a", "exponent"], rows))
}

fn cmd_census(a: &CensusArgs, classes: bool, budget: Budget) -> Out {
    let alpha = alphabet(a.m)?;
    if a.n > 0 {
        eprintln!("enumerating {}^{} words", a.m, a.n);
    }
    let c = census(alpha, a.n, a.k, budget)?;
    let mut result = json!({"count": c.class_count(), "words_enumerated": c.words_enumerated});
    let mut report_rows = vec![vec![
        a.m.to_string(),
        a.k.to_string(),
        a.n.to_string(),
        c.class_count().to_string(),
    ]];
    let mut headers = vec!["m", "k", "n", "count"];
    let mut human = c.class_count().to_string();
    if classes {
        let list: Vec<Value> = c
            .classes
            .iter()
            .map(|r| json!({"representative": r.representative.to_string(), "size": r.size, "signature": r.signature}))
            .collect();
        result["classes"] = Value::Array(list);
        headers = vec!["representative", "size", "signature"];
        report_rows = c
            .classes
            .iter()
            .map(|r| {
                let sig = r
                    .signature
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                vec![r.representative.to_string(), r.size.to_string(), sig]
            })
            .collect();
        for r in &c.classes {
            human.push_str(&format!("\n{}\t{}", r.representative, r.size));
        }
    }
    Ok(
        Report::new("census", json!({"m": a.m, "k": a.k, "n": a.n}), result)
            .human(human)
            .table(headers, report_rows)
            .budget(c.words_enumerated),
    )
}

fn cmd_language(a: &CensusArgs, kind: Kind, budget: Budget) -> Out {
    let alpha = alphabet(a.m)?;
    let used = budget.check_words(alpha, a.n)?;
    let (name, words) = match kind {
        Kind::Ll => ("ll", ll_language(alpha, a.n, a.k, budget)?),
        Kind::Sing => ("sing", sing_language(alpha, a.n, a.k, budget)?),
    };
    Ok(Report::new(
        name,
        json!({"m": a.m, "k": a.k, "n": a.n}),
        words_json(&words),
    )
    .human(lines(&words))
    .table(vec!["word"], word_rows(&words))
    .budget(used))
}

fn cmd_f_parikh(k: usize, text: &str, budget: Budget) -> Out {
    let x = parikh(text)?;
    let used = budget.check(&x.class_size())?;
    let f = f_parikh_k(&x, k, budget)?;
    Ok(
        Report::new("f-parikh", json!({"k": k, "parikh": x.counts()}), json!(f))
            .human(f.to_string())
            .table(
                vec!["parikh", "k", "f"],
                vec![vec![x.to_string(), k.to_string(), f.to_string()]],
            )
            .budget(used),
    )
}

fn cmd_bounds(text: &str, budget: Budget) -> Out {
    let x = parikh(text)?;
    let used = budget.check(&x.class_size())?;
    let r = check_growth_bounds(&x, budget)?;
    let result = json!({
        "f": r.f,
        "lower": big_json(&r.lower),
        "upper": big_json(&r.upper),
        "upper_uncorrected": big_json(&r.upper_uncorrected),
        "lower_holds": r.lower_holds,
        "upper_holds": r.upper_holds,
        "upper_uncorrected_holds": r.upper_uncorrected_holds,
    });
    let human = format!(
        "{} <= f = {} <= {}  ({})\nuncorrected product {}: {}",
        r.lower,
        r.f,
        r.upper,
        if r.passes() { "holds" } else { "FAILS" },
        r.upper_uncorrected,
        if r.upper_uncorrected_holds {
            "holds"
        } else {
            "fails"
        },
    );
    Ok(Report::new("bounds", json!({"parikh": x.counts()}), result)
        .human(human)
        .table(
            vec![
                "parikh",
                "f",
                "lower",
                "upper",
                "upper_uncorrected",
                "lower_holds",
                "upper_holds",
            ],
            vec![vec![
                x.to_string(),
                r.f.to_string(),
                r.lower.to_string(),
                r.upper.to_string(),
                r.upper_uncorrected.to_string(),
                r.lower_holds.to_string(),
                r.upper_holds.to_string(),
            ]],
        )
        .budget(used)
        .note(BOUND_NOTE))
}

fn cmd_rho(p: &str, n: usize, seq: &SequenceArgs) -> Out {
    let p = big(p, "p")?;
    let s = sequence(seq, n.saturating_sub(1))?;
    let r = rho(&p, n, &s)?;
    Ok(Report::new(
        "rho",
        json!({"p": big_json(&p), "n": n, "sequence": sequence_json(&s)}),
        json!({"runs": runs_json(&r), "length": big_json(&r.len()), "blocks": r.block_count()}),
    )
    .human(r.to_string())
    .table(vec!["letter", "exponent"], runs_rows(&r)))
}

fn cmd_validate(terms: &[String]) -> Out {
    let s = parse_terms(terms)?;
    let report = validate_sequence(&s);
    let checks: Vec<Value> = report
        .terms
        .iter()
        .map(|t| json!({"n": t.n, "d1": t.d1, "d2": t.d2, "d3": t.d3}))
        .collect();
    let rows = report
        .terms
        .iter()
        .map(|t| {
            vec![
                t.n.to_string(),
                t.d1.to_string(),
                t.d2.to_string(),
                t.d3.to_string(),
            ]
        })
        .collect();
    let mut human: Vec<String> = report
        .terms
        .iter()
        .map(|t| format!("n={} D1={} D2={} D3={}", t.n, t.d1, t.d2, t.d3))
        .collect();
    human.push(if report.passes() {
        "valid".into()
    } else {
        "invalid".into()
    });
    Ok(Report::new(
        "validate-seq",
        json!({"terms": sequence_json(&s)}),
        json!({"passes": report.passes(), "terms": checks}),
    )
    .human(human.join("\n"))
    .table(vec!["n", "d1", "d2", "d3"], rows))
}

fn cmd_min_seq(count: usize) -> Out {
    let s = minimal_sequence(count);
    let rows = s
        .terms()
        .iter()
        .enumerate()
        .map(|(i, t)| vec![(i + 1).to_string(), t.to_string()])
        .collect();
    Ok(
        Report::new("min-seq", json!({"count": count}), sequence_json(&s))
            .human(
                s.terms()
                    .iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join("\n"),
            )
            .table(vec!["n", "term"], rows),
    )
}

fn cmd_nb(a: &WordArgs) -> Out {
    let w = word(&a.word, a.m)?;
    let r = letter_factorization(&w)?;
    Ok(Report::new(
        "nb",
        json!({"m": a.m, "word": w.to_string()}),
        json!({"blocks": r.block_count(), "runs": runs_json(&r)}),
    )
    .human(format!("{}\n{}", r.block_count(), r))
    .table(vec!["letter", "exponent"], runs_rows(&r)))
}

fn parse_rho_arg(text: &str) -> Result<(BigUint, usize), CliError> {
    let bad = || CliError::Input(format!("invalid rho argument {text:?}: expected \"p,n\""));
    let (p, n) = text.split_once(',').ok_or_else(bad)?;
    let n = n.trim().parse::<usize>().map_err(|_| bad())?;
    Ok((big(p, "p")?, n))
}

fn cmd_is_singleton(
    m: Option<usize>,
    k: usize,
    text: Option<&str>,
    rho_arg: Option<&str>,
    budget: Budget,
) -> Out {
    let (w, inputs) = match (text, rho_arg) {
        (_, Some(arg)) => {
            let (p, n) = parse_rho_arg(arg)?;
            let s = minimal_sequence(n.saturating_sub(1));
            let r = rho(&p, n, &s)?;
            let len = usize::try_from(&r.len()).unwrap_or(usize::MAX);
            let w = r.to_word(len)?;
            (w, json!({"k": k, "rho": {"p": big_json(&p), "n": n}}))
        }
        (Some(t), None) => {
            let m = m.ok_or_else(|| CliError::Input("--m is required with a word".into()))?;
            let w = word(t, m)?;
            let inputs = json!({"m": m, "k": k, "word": w.to_string()});
            (w, inputs)
        }
        (None, None) => return Err(CliError::Input("give a word or --rho".into())),
    };
    let used = budget.check(&w.parikh().class_size())?;
    let single = is_singleton(&w, k, budget)?;
    Ok(Report::new("is-singleton", inputs, json!(single))
        .human(single.to_string())
        .table(
            vec!["word", "k", "singleton"],
            vec![vec![w.to_string(), k.to_string(), single.to_string()]],
        )
        .budget(used)
        .note(
            "competitors range over the abelian class, which contains the whole k-binomial class",
        ))
}

fn cmd_prop54(p: &str, n: usize, seq: &SequenceArgs, budget: Budget) -> Out {
    let p = big(p, "p")?;
    let s = sequence(seq, n.saturating_sub(1))?;
    let r = rho(&p, n, &s)?;
    let report = check_prop54(&r, budget)?;
    let human = match &report.counterexample {
        None => format!(
            "no competitor dominates rho on 12, 23 and 31 ({} checked)",
            report.competitors
        ),
        Some(u) => format!("counterexample: {u}"),
    };
    Ok(Report::new(
        "prop54",
        json!({"p": big_json(&p), "n": n, "sequence": sequence_json(&s)}),
        json!({"passes": report.passes(), "competitors": report.competitors, "counterexample": report.counterexample}),
    )
    .human(human)
    .table(
        vec!["competitors", "counterexample"],
        vec![vec![report.competitors.to_string(), report.counterexample.clone().unwrap_or_default()]],
    )
    .budget(report.competitors + 1))
}

fn depths(text: Option<&str>, cutoff: usize) -> Result<Vec<usize>, CliError> {
    match text {
        None => Ok((1..=cutoff).collect()),
        Some(t) => t
            .split(',')
            .map(|d| {
                d.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Input(format!("invalid depth {d:?} in {t:?}")))
            })
            .collect(),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_automaticity(
    kind: Kind,
    m: usize,
    k: usize,
    cutoff: usize,
    t: Option<&str>,
    convention: Convention,
    budget: Budget,
) -> Out {
    let alpha = alphabet(m)?;
    let lang = match kind {
        Kind::Ll => LanguageKind::LeastRepresentatives,
        Kind::Sing => LanguageKind::Singletons,
    };
    let conv = match convention {
        Convention::Published => NerodeConvention::Published,
        Convention::Literal => NerodeConvention::Literal,
    };
    let ts = depths(t, cutoff)?;
    eprintln!("building slice up to length {cutoff}");
    let slice = build_slice(lang, alpha, k, cutoff, budget)?;
    let mut rows = Vec::new();
    let mut table = Vec::new();
    for &d in &ts {
        eprintln!("t = {d}");
        let c = approx_nerode_count(&slice, d, conv)?;
        rows.push(json!({"t": d, "classes": c}));
        table.push(vec![d.to_string(), c.to_string()]);
    }
    let used: u64 = (0..=cutoff)
        .map(|n| budget.check_words(alpha, n))
        .sum::<Result<u64, _>>()?;
    let kind_name = match kind {
        Kind::Ll => "ll",
        Kind::Sing => "sing",
    };
    let conv_name = match convention {
        Convention::Published => "published",
        Convention::Literal => "literal",
    };
    Ok(Report::new(
        "automaticity",
        json!({"kind": kind_name, "m": m, "k": k, "cutoff": cutoff, "t": ts, "convention": conv_name}),
        Value::Array(rows),
    )
    .human(table.iter().map(|r| format!("t={}\t{}", r[0], r[1])).collect::<Vec<_>>().join("\n"))
    .table(vec!["t", "classes"], table)
    .budget(used)
    .note(format!("{conv_name} convention: {}", conv.describe())))
}

fn cmd_seed_tables(budget: Budget) -> Out {
    let mut human = Vec::new();
    let mut rows = Vec::new();
    let mut used = 0u64;

    eprintln!("ternary census");
    let a3 = alphabet(3)?;
    let mut ternary = Vec::new();
    for n in 0..=9 {
        let c = count_classes(a3, n, 2, budget)?;
        used += budget.check_words(a3, n)?;
        ternary.push(c);
        rows.push(vec!["ternary_k2".to_string(), n.to_string(), c.to_string()]);
    }
    human.push(format!("ternary k=2, n=0..9: {ternary:?}"));

    eprintln!("binary census");
    let a2 = alphabet(2)?;
    let mut binary = Vec::new();
    let mut binary_counts = Vec::new();
    for n in 0..=12 {
        let c = count_classes(a2, n, 2, budget)?;
        used += budget.check_words(a2, n)?;
        let formula = cake_count(n as u64);
        binary.push(json!({"n": n, "count": c, "formula": big_json(&formula)}));
        binary_counts.push(c);
        rows.push(vec!["binary_k2".to_string(), n.to_string(), c.to_string()]);
    }
    human.push(format!("binary k=2, n=0..12: {binary_counts:?}"));

    let values: Vec<num_bigint::BigInt> = ternary[..9].iter().map(|&v| v.into()).collect();
    let predicted = extrapolate_polynomial(&values);
    human.push(format!(
        "degree-8 extrapolation at n=9: {predicted} (enumerated {})",
        ternary[9]
    ));
    rows.push(vec![
        "extrapolated_n9".to_string(),
        "9".to_string(),
        predicted.to_string(),
    ]);

    let s = minimal_sequence(3);
    human.push(format!(
        "minimal sequence: {}",
        s.terms()
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    for (i, t) in s.terms().iter().enumerate() {
        rows.push(vec![
            "minimal_sequence".to_string(),
            (i + 1).to_string(),
            t.to_string(),
        ]);
    }

    let conv = NerodeConvention::Published;
    let mut tables = Vec::new();
    for (name, m, k, cutoff, tmax) in [
        ("binary_ll_k3_c15", 2usize, 3usize, 15usize, 9usize),
        ("ternary_ll_k2_c9", 3, 2, 9, 6),
    ] {
        eprintln!("automaticity {name}");
        let alpha = alphabet(m)?;
        let slice = build_slice(LanguageKind::LeastRepresentatives, alpha, k, cutoff, budget)?;
        for n in 0..=cutoff {
            used += budget.check_words(alpha, n)?;
        }
        let mut counts = Vec::new();
        for t in 1..=tmax {
            let c = approx_nerode_count(&slice, t, conv)?;
            counts.push(c);
            rows.push(vec![name.to_string(), t.to_string(), c.to_string()]);
        }
        human.push(format!("{name}, t=1..{tmax}: {counts:?}"));
        tables.push(json!({"name": name, "m": m, "k": k, "cutoff": cutoff, "counts": counts}));
    }

    Ok(Report::new(
        "seed-tables",
        json!({}),
        json!({
            "ternary_counts": ternary,
            "binary_counts": binary,
            "extrapolated_n9": predicted.to_string(),
            "minimal_sequence": sequence_json(&s),
            "automaticity": tables,
        }),
    )
    .human(human.join("\n"))
    .table(vec!["table", "index", "value"], rows)
    .budget(used)
    .note(format!(
        "automaticity uses the published convention: {}",
        conv.describe()
    )))
}

use serde_json::{Map, Value as Json};
use thiserror::Error;

use super::model::{default_witnesses, Backend, FuzzyMembership, ModelError, ModelInteger, Scenario, Threshold};
use crate::exactnum::{parse_rational, parse_series, EpsSeries, Rational};
use crate::logic::PrecisificationFamily;
use crate::neutrix::parse_external;

/// Invalid scenario document; `pointer` locates the offending value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pointer}: {message}")]
pub struct ConfigError {
    pub pointer: String,
    pub message: String,
}

fn err<T>(pointer: &str, message: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError {
        pointer: pointer.to_string(),
        message: message.into(),
    })
}

fn object<'a>(v: &'a Json, at: &str) -> Result<&'a Map<String, Json>, ConfigError> {
    v.as_object().map_or_else(|| err(at, "expected an object"), Ok)
}

fn only_keys(m: &Map<String, Json>, at: &str, allowed: &[&str]) -> Result<(), ConfigError> {
    match m.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => err(&format!("{at}/{k}"), "unknown field"),
        None => Ok(()),
    }
}

fn field<'a>(m: &'a Map<String, Json>, at: &str, key: &str) -> Result<&'a Json, ConfigError> {
    m.get(key).map_or_else(|| err(&format!("{at}/{key}"), "missing field"), Ok)
}

fn int(v: &Json, at: &str) -> Result<i64, ConfigError> {
    v.as_i64().map_or_else(|| err(at, "expected an integer"), Ok)
}

fn rational(v: &Json, at: &str) -> Result<Rational, ConfigError> {
    match v {
        Json::Number(n) => n.as_i64().map(crate::exactnum::rat).map_or_else(
            || err(at, "expected an integer or a rational string such as \"1/2\""),
            Ok,
        ),
        Json::String(s) => parse_rational(s).or_else(|e| err(at, e.to_string())),
        _ => err(at, "expected a rational"),
    }
}

fn series(v: &Json, at: &str) -> Result<EpsSeries, ConfigError> {
    match v {
        Json::String(s) => parse_series(s).or_else(|e| err(at, e.to_string())),
        _ => err(at, "expected a series string such as \"e^-1\""),
    }
}

fn backend(v: &Json) -> Result<Backend, ConfigError> {
    let m = object(v, "/backend")?;
    only_keys(m, "/backend", &["type", "params"])?;
    let ty = field(m, "/backend", "type")?;
    let Some(ty) = ty.as_str() else {
        return err("/backend/type", "expected a string");
    };
    let empty = Map::new();
    let params = match m.get("params") {
        Some(p) => object(p, "/backend/params")?,
        None => &empty,
    };
    let p = "/backend/params";
    let get = |key: &str| field(params, p, key);
    let at = |key: &str| format!("{p}/{key}");
    match ty {
        "classical_cutoff" => {
            only_keys(params, p, &["k"])?;
            Ok(Backend::ClassicalCutoff(int(get("k")?, &at("k"))?))
        }
        "kleene_penumbra" => {
            only_keys(params, p, &["t1", "t2"])?;
            let t1 = int(get("t1")?, &at("t1"))?;
            let t2 = int(get("t2")?, &at("t2"))?;
            if t1 > t2 {
                return err(&at("t2"), "t1 must not exceed t2");
            }
            Ok(Backend::KleenePenumbra(t1, t2))
        }
        "fuzzy_membership" => {
            only_keys(params, p, &["breakpoints", "threshold"])?;
            let Some(list) = get("breakpoints")?.as_array() else {
                return err(&at("breakpoints"), "expected an array of [index, degree] pairs");
            };
            let mut bps = Vec::new();
            for (i, item) in list.iter().enumerate() {
                let here = format!("{}/{i}", at("breakpoints"));
                match item.as_array().map(Vec::as_slice) {
                    Some([n, d]) => bps.push((int(n, &format!("{here}/0"))?, rational(d, &format!("{here}/1"))?)),
                    _ => return err(&here, "expected an [index, degree] pair"),
                }
            }
            let threshold = match params.get("threshold") {
                Some(t) => rational(t, &at("threshold"))?,
                None => crate::exactnum::rat(1),
            };
            FuzzyMembership::new(bps, threshold)
                .map(Backend::FuzzyMembership)
                .or_else(|e| err(&at("breakpoints"), e.to_string()))
        }
        "supervaluation" => {
            only_keys(params, p, &["cutoffs"])?;
            let Some(list) = get("cutoffs")?.as_array() else {
                return err(&at("cutoffs"), "expected an array of integers");
            };
            let ks = list
                .iter()
                .enumerate()
                .map(|(i, k)| int(k, &format!("{}/{i}", at("cutoffs"))))
                .collect::<Result<Vec<_>, _>>()?;
            PrecisificationFamily::new(ks)
                .map(Backend::Superval)
                .or_else(|e| err(&at("cutoffs"), e.to_string()))
        }
        "nonstandard" => {
            only_keys(params, p, &["threshold"])?;
            let Some(t) = get("threshold")?.as_str() else {
                return err(&at("threshold"), "expected \"limited\" or an external number");
            };
            if t == "limited" || t == "£" {
                return Ok(Backend::Nonstandard(Threshold::Limited));
            }
            parse_external(t)
                .map(|a| Backend::Nonstandard(Threshold::Cut(a)))
                .or_else(|e| err(&at("threshold"), e.to_string()))
        }
        other => err(
            "/backend/type",
            format!(
                "unknown backend `{other}`; expected one of classical_cutoff, kleene_penumbra, \
                 fuzzy_membership, supervaluation, nonstandard"
            ),
        ),
    }
}

/// Builds a scenario from a JSON document.
pub fn scenario_from_json(text: &str) -> Result<Scenario, ConfigError> {
    let doc: Json = serde_json::from_str(text).or_else(|e| err("", format!("invalid JSON: {e}")))?;
    let m = object(&doc, "")?;
    only_keys(m, "", &["name", "range", "backend", "witnesses", "chainLength"])?;
    let Some(name) = field(m, "", "name")?.as_str() else {
        return err("/name", "expected a string");
    };
    let range = match field(m, "", "range")?.as_array().map(Vec::as_slice) {
        Some([lo, hi]) => (int(lo, "/range/0")?, int(hi, "/range/1")?),
        _ => return err("/range", "expected [lo, hi]"),
    };
    let backend = backend(field(m, "", "backend")?)?;
    let witnesses = match m.get("witnesses") {
        None if matches!(backend, Backend::Nonstandard(_)) => default_witnesses(),
        None => Vec::new(),
        Some(Json::Array(list)) => list
            .iter()
            .enumerate()
            .map(|(i, w)| series(w, &format!("/witnesses/{i}")))
            .collect::<Result<_, _>>()?,
        Some(_) => return err("/witnesses", "expected an array of series strings"),
    };
    let chain = match m.get("chainLength") {
        None => None,
        Some(Json::Number(_)) => Some(ModelInteger::Naive(int(&m["chainLength"], "/chainLength")?)),
        Some(v) => {
            let s = series(v, "/chainLength")?;
            match ModelInteger::witness(s.clone()) {
                Some(w) => Some(w),
                None => return err("/chainLength", format!("`{s}` is neither a natural number nor unlimited")),
            }
        }
    };
    Scenario::new(name, range, backend, witnesses, chain).map_err(|e| {
        let pointer = match &e {
            ModelError::Range(..) => "/range".to_string(),
            ModelError::Penumbra(..) => "/backend/params".to_string(),
            ModelError::Membership(_) => "/backend/params".to_string(),
            ModelError::ChainLength { .. } => "/chainLength".to_string(),
            ModelError::Witness(w) => {
                let i = m["witnesses"]
                    .as_array()
                    .and_then(|l| l.iter().position(|x| series(x, "").map(|s| s.to_string()).as_deref() == Ok(w)))
                    .unwrap_or(0);
                format!("/witnesses/{i}")
            }
        };
        ConfigError {
            pointer,
            message: e.to_string(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pointer(text: &str) -> String {
        scenario_from_json(text).unwrap_err().pointer
    }

    #[test]
    fn classical() {
        let sc = scenario_from_json(
            r#"{"name": "c", "range": [1, 10], "backend": {"type": "classical_cutoff", "params": {"k": 5}}, "chainLength": 9}"#,
        )
        .unwrap();
        assert_eq!(sc.backend, Backend::ClassicalCutoff(5));
        assert_eq!(sc.chain_length, ModelInteger::Naive(9));
    }

    #[test]
    fn nonstandard_with_witness_chain() {
        let sc = scenario_from_json(
            r#"{"name": "h", "range": [1, 1000], "backend": {"type": "nonstandard", "params": {"threshold": "limited"}},
                "witnesses": ["e^-1"], "chainLength": "e^-1"}"#,
        )
        .unwrap();
        assert!(!sc.chain_length.is_standard());
        assert_eq!(sc.witnesses, vec![EpsSeries::omega()]);
    }

    #[test]
    fn error_pointers() {
        assert_eq!(
            pointer(r#"{"name": "x", "range": [1, 10], "backend": {"type": "telepathy"}}"#),
            "/backend/type"
        );
        assert_eq!(
            pointer(r#"{"name": "x", "range": [1, 10], "backend": {"type": 3}}"#),
            "/backend/type"
        );
        assert_eq!(
            pointer(r#"{"name": "x", "range": [1, 10], "backend": {"type": "classical_cutoff", "params": {}}}"#),
            "/backend/params/k"
        );
        assert_eq!(
            pointer(r#"{"name": "x", "range": [10, 1], "backend": {"type": "classical_cutoff", "params": {"k": 5}}}"#),
            "/range"
        );
        assert_eq!(
            pointer(
                r#"{"name": "x", "range": [1, 10], "backend": {"type": "nonstandard", "params": {"threshold": "limited"}},
                    "witnesses": ["e^-1", "e"]}"#
            ),
            "/witnesses/1"
        );
        assert_eq!(pointer(r#"{"name": "x"}"#), "/range");
        assert_eq!(pointer("[1"), "");
        assert_eq!(
            pointer(r#"{"name": "x", "range": [1, 10], "backend": {"type": "classical_cutoff", "params": {"k": 5}}, "chainLength": 11}"#),
            "/chainLength"
        );
        assert_eq!(
            pointer(r#"{"name": "x", "range": [1, 10], "colour": 1, "backend": {"type": "classical_cutoff", "params": {"k": 5}}}"#),
            "/colour"
        );
    }
}

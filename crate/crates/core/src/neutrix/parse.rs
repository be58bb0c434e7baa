use crate::exactnum::parse::{series_sum, Cursor};
use crate::exactnum::{EpsSeries, ParseSeriesError, Rational};

use super::external::ExternalNumber;
use super::group::{Neutrix, NeutrixKind};

/// `L(q)`, `o(q)`, `£` (= `L(0)`) or `osl` (= `o(0)`).
pub(crate) fn neutrix_literal(cur: &mut Cursor<'_>) -> Result<Option<Neutrix>, ParseSeriesError> {
    if cur.eat("£") {
        return Ok(Some(Neutrix::lim()));
    }
    if cur.eat_word("osl") {
        return Ok(Some(Neutrix::osl()));
    }
    let kind = if cur.eat_word("L") {
        NeutrixKind::Lim
    } else if cur.eat_word("o") {
        NeutrixKind::Osl
    } else {
        return Ok(None);
    };
    cur.expect("(")?;
    let q: Rational = cur.signed_rational()?;
    cur.expect(")")?;
    Ok(Some(Neutrix::Scaled(q, kind)))
}

/// Parses `<series> + L(q)`, `<series> + o(q)`, `<series>`, or a bare neutrix.
pub fn parse_external(text: &str) -> Result<ExternalNumber, ParseSeriesError> {
    let mut cur = Cursor::new(text);
    let parsed = if let Some(n) = neutrix_literal(&mut cur)? {
        ExternalNumber::from_neutrix(n)
    } else {
        let rep: EpsSeries = series_sum(&mut cur, false)?;
        if cur.eat("+") {
            match neutrix_literal(&mut cur)? {
                Some(n) => ExternalNumber::new(rep, n),
                None => return Err(cur.error("expected a neutrix")),
            }
        } else {
            ExternalNumber::exact(rep)
        }
    };
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(parsed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    #[test]
    fn forms() {
        assert_eq!(
            parse_external("3 + osl").unwrap(),
            ExternalNumber::new(EpsSeries::from_int(3), Neutrix::osl())
        );
        assert_eq!(parse_external("£").unwrap(), ExternalNumber::from_neutrix(Neutrix::lim()));
        assert_eq!(
            parse_external("e^(-1) + 2 + L(1/2)").unwrap(),
            ExternalNumber::new(
                EpsSeries::from_terms([(rat(-1), rat(1)), (rat(0), rat(2))]),
                Neutrix::Scaled(ratio(1, 2), NeutrixKind::Lim)
            )
        );
        assert_eq!(
            parse_external("o(-1)").unwrap(),
            ExternalNumber::from_neutrix(Neutrix::Scaled(rat(-1), NeutrixKind::Osl))
        );
        assert_eq!(parse_external("e^-1").unwrap(), ExternalNumber::exact(EpsSeries::omega()));
    }

    #[test]
    fn canonicalizes_on_parse() {
        assert_eq!(
            parse_external("e + osl").unwrap(),
            ExternalNumber::from_neutrix(Neutrix::osl())
        );
    }

    #[test]
    fn display_round_trips() {
        for text in ["6 + o(0)", "L(0)", "e^(-1) + 3 - 2*e^(1/2) + L(1)", "-1/2*e^2", "0"] {
            let x = parse_external(text).unwrap();
            assert_eq!(x.to_string(), text);
            assert_eq!(parse_external(&x.to_string()).unwrap(), x);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_external("3 + ").is_err());
        assert!(parse_external("3 + L(").is_err());
        assert!(parse_external("L(0) + 3").is_err());
    }
}

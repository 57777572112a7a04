//! Reference tables of the harmonic basis `h_λ` up to weight 10 and the
//! q-brackets of the even-weight elements.
//!
//! Each row stores the scalar content and the primitive integer polynomial
//! exactly as they are conventionally printed, `h_λ = content · (primitive)`.
//! The rows for (4,4), (7,3), (6,4), (5,5) and (4,3,3) carry corrected
//! coefficients; the commonly circulated versions of those five, kept in
//! `misprint`, are not harmonic (two are not even homogeneous).

use crate::error::Result;
use crate::partitions::Partition;
use crate::qseries::parse_rational;
use crate::quasimodular::QMForm;
use crate::ssym::{parse, SSPoly};

#[derive(Debug, Clone, Copy)]
pub struct GoldenRow {
    pub lambda: &'static str,
    pub content: &'static str,
    pub primitive: &'static str,
    /// `None` for odd weights, whose brackets vanish.
    pub bracket: Option<&'static str>,
    /// The commonly printed primitive part where it is wrong.
    pub misprint: Option<&'static str>,
    /// The rendered LaTeX table row.
    pub latex: &'static str,
}

impl GoldenRow {
    pub fn partition(&self) -> Partition {
        self.lambda.parse().expect("golden partition")
    }

    pub fn h(&self) -> Result<SSPoly> {
        let c = parse_rational(self.content).expect("golden content");
        Ok(parse(self.primitive)?.scale(&c))
    }

    pub fn misprinted_h(&self) -> Option<SSPoly> {
        let c = parse_rational(self.content).expect("golden content");
        self.misprint
            .map(|m| parse(m).expect("golden misprint").scale(&c))
    }

    pub fn bracket_form(&self) -> Option<QMForm> {
        self.bracket.map(|b| b.parse().expect("golden bracket"))
    }
}

pub const EVEN_TABLE: &[GoldenRow] = &[
    GoldenRow {
        lambda: "()",
        content: "1",
        primitive: "1",
        bracket: Some("1"),
        misprint: None,
        latex: r"() & 1 & 1 \\",
    },
    GoldenRow {
        lambda: "(4)",
        content: "27/4",
        primitive: "Q2^2 + 2*Q4",
        bracket: Some("9/320*Q"),
        misprint: None,
        latex: r"(4) & \frac{27}{4} \left(2 Q_4 + Q_2^2\right) & \frac{9}{320} Q \\",
    },
    GoldenRow {
        lambda: "(6)",
        content: "225/4",
        primitive: "63*Q6 + 9*Q2*Q4 + Q2^3",
        bracket: Some("-55/384*R"),
        misprint: None,
        latex: r"(6) & \frac{225}{4} \left(63 Q_6 + 9 Q_2 Q_4 + Q_2^3\right) & -\frac{55}{384} R \\",
    },
    GoldenRow {
        lambda: "(3,3)",
        content: "225/4",
        primitive: "63*Q3^2 - 108*Q2*Q4 + 2*Q2^3",
        bracket: Some("115/384*R"),
        misprint: None,
        latex: r"(3,3) & \frac{225}{4} \left(63 Q_3^2 - 108 Q_2 Q_4 + 2 Q_2^3\right) & \frac{115}{384} R \\",
    },
    GoldenRow {
        lambda: "(8)",
        content: "19845/16",
        primitive: "3960*Q8 + 360*Q2*Q6 + 20*Q2^2*Q4 + Q2^4",
        bracket: Some("19173/4096*Q^2"),
        misprint: None,
        latex: r"(8) & \frac{19845}{16} \left(3960 Q_8 + 360 Q_2 Q_6 + 20 Q_2^2 Q_4 + Q_2^4\right) & \frac{19173}{4096} Q^2 \\",
    },
    GoldenRow {
        lambda: "(5,3)",
        content: "19845/2",
        primitive: "495*Q3*Q5 + 45*Q2*Q3^2 - 1350*Q2*Q6 - 50*Q2^2*Q4 + 2*Q2^4",
        bracket: Some("-2415/128*Q^2"),
        misprint: None,
        latex: r"(5,3) & \frac{19845}{2} \left(495 Q_3 Q_5 + 45 Q_2 Q_3^2 - 1350 Q_2 Q_6 - 50 Q_2^2 Q_4 + 2 Q_2^4\right) & -\frac{2415}{128} Q^2 \\",
    },
    GoldenRow {
        lambda: "(4,4)",
        content: "297675/8",
        primitive: "132*Q4^2 + 24*Q2*Q3^2 - 480*Q2*Q6 - 28*Q2^2*Q4 + Q2^4",
        bracket: Some("-38241/2048*Q^2"),
        misprint: Some(
            "132*Q4^2 + 24*Q2*Q3^2 - 440*Q2*Q6 - 28*Q2^2*Q4 + Q2^4",
        ),
        latex: r"(4,4) & \frac{297675}{8} \left(132 Q_4^2 + 24 Q_2 Q_3^2 - 480 Q_2 Q_6 - 28 Q_2^2 Q_4 + Q_2^4\right) & -\frac{38241}{2048} Q^2 \\",
    },
    GoldenRow {
        lambda: "(10)",
        content: "382725/8",
        primitive: "450450*Q10 + 30030*Q2*Q8 + 1155*Q2^2*Q6 + 35*Q2^3*Q4 + Q2^5",
        bracket: Some("-2053485/4096*Q*R"),
        misprint: None,
        latex: r"(10) & \frac{382725}{8} \left(450450 Q_{10} + 30030 Q_2 Q_8 + 1155 Q_2^2 Q_6 + 35 Q_2^3 Q_4 + Q_2^5\right) & -\frac{2053485}{4096} QR \\",
    },
    GoldenRow {
        lambda: "(7,3)",
        content: "1913625/8",
        primitive: "90090*Q3*Q7 + 6006*Q2*Q3*Q5 - 336336*Q2*Q8 + 231*Q2^2*Q3^2 - 12936*Q2^2*Q6 - 112*Q2^3*Q4 + 10*Q2^5",
        bracket: Some("11975985/4096*Q*R"),
        misprint: Some(
            "90090*Q3*Q7 + 6006*Q2*Q3*Q5 - 336336*Q2*Q8 + 231*Q2*Q3^2 - 12936*Q2^2*Q6 - 112*Q2^3*Q4 + 10*Q2^5",
        ),
        latex: r"(7,3) & \frac{1913625}{8} \left(90090 Q_3 Q_7 + 6006 Q_2 Q_3 Q_5 - 336336 Q_2 Q_8 + 231 Q_2^2 Q_3^2 - 12936 Q_2^2 Q_6 - 112 Q_2^3 Q_4 + 10 Q_2^5\right) & \frac{11975985}{4096} QR \\",
    },
    GoldenRow {
        lambda: "(6,4)",
        content: "13395375/8",
        primitive: "12870*Q4*Q6 + 1716*Q2*Q3*Q5 + 858*Q2*Q4^2 - 96096*Q2*Q8 + 132*Q2^2*Q3^2 - 6501*Q2^2*Q6 - 89*Q2^3*Q4 + 5*Q2^5",
        bracket: Some("21255885/4096*Q*R"),
        misprint: Some(
            "12870*Q4*Q6 + 1716*Q2*Q3*Q5 + 858*Q2*Q4^2 - 96096*Q2*Q8 + 132*Q2^2*Q3^2 - 6501*Q2^2*Q6 - 89*Q2^3*Q4 + 5*Q2^4",
        ),
        latex: r"(6,4) & \frac{13395375}{8} \left(12870 Q_4 Q_6 + 1716 Q_2 Q_3 Q_5 + 858 Q_2 Q_4^2 - 96096 Q_2 Q_8 + 132 Q_2^2 Q_3^2 - 6501 Q_2^2 Q_6 - 89 Q_2^3 Q_4 + 5 Q_2^5\right) & \frac{21255885}{4096} QR \\",
    },
    GoldenRow {
        lambda: "(5,5)",
        content: "8037225/4",
        primitive: "10725*Q5^2 + 1430*Q2*Q3*Q5 + 1430*Q2*Q4^2 - 100100*Q2*Q8 + 165*Q2^2*Q3^2 - 7700*Q2^2*Q6 - 120*Q2^3*Q4 + 6*Q2^5",
        bracket: Some("7759395/1024*Q*R"),
        misprint: Some(
            "10725*Q5^2 + 1430*Q2*Q3*Q5 + 1430*Q2*Q4^2 - 10010*Q2*Q8 + 165*Q2^2*Q3^2 - 7700*Q2^2*Q6 - 120*Q2^3*Q4 + 6*Q2^5",
        ),
        latex: r"(5,5) & \frac{8037225}{4} \left(10725 Q_5^2 + 1430 Q_2 Q_3 Q_5 + 1430 Q_2 Q_4^2 - 100100 Q_2 Q_8 + 165 Q_2^2 Q_3^2 - 7700 Q_2^2 Q_6 - 120 Q_2^3 Q_4 + 6 Q_2^5\right) & \frac{7759395}{1024} QR \\",
    },
    GoldenRow {
        lambda: "(4,3,3)",
        content: "13395375/8",
        primitive: "12870*Q3^2*Q4 - 34320*Q2*Q3*Q5 - 10296*Q2*Q4^2 + 363*Q2^2*Q3^2 + 55440*Q2^2*Q6 - 376*Q2^3*Q4 + 10*Q2^5",
        bracket: Some("-16583805/4096*Q*R"),
        misprint: Some(
            "12870*Q3^2*Q4 - 34320*Q2*Q3*Q5 + 10296*Q2*Q4^2 + 363*Q2^2*Q3^2 + 55440*Q2^2*Q6 - 376*Q2^3*Q4 + 10*Q2^5",
        ),
        latex: r"(4,3,3) & \frac{13395375}{8} \left(12870 Q_3^2 Q_4 - 34320 Q_2 Q_3 Q_5 - 10296 Q_2 Q_4^2 + 363 Q_2^2 Q_3^2 + 55440 Q_2^2 Q_6 - 376 Q_2^3 Q_4 + 10 Q_2^5\right) & -\frac{16583805}{4096} QR \\",
    },
];

pub const ODD_TABLE: &[GoldenRow] = &[
    GoldenRow {
        lambda: "(3)",
        content: "-9/4",
        primitive: "Q3",
        bracket: None,
        misprint: None,
        latex: r"(3) & -\frac{9}{4} Q_3 \\",
    },
    GoldenRow {
        lambda: "(5)",
        content: "-135/4",
        primitive: "5*Q5 + Q2*Q3",
        bracket: None,
        misprint: None,
        latex: r"(5) & -\frac{135}{4} \left(5 Q_5 + Q_2 Q_3\right) \\",
    },
    GoldenRow {
        lambda: "(7)",
        content: "-14175/16",
        primitive: "126*Q7 + 14*Q2*Q5 + Q2^2*Q3",
        bracket: None,
        misprint: None,
        latex: r"(7) & -\frac{14175}{16} \left(126 Q_7 + 14 Q_2 Q_5 + Q_2^2 Q_3\right) \\",
    },
    GoldenRow {
        lambda: "(4,3)",
        content: "-99225/16",
        primitive: "18*Q3*Q4 - 40*Q2*Q5 + Q2^2*Q3",
        bracket: None,
        misprint: None,
        latex: r"(4,3) & -\frac{99225}{16} \left(18 Q_3 Q_4 - 40 Q_2 Q_5 + Q_2^2 Q_3\right) \\",
    },
    GoldenRow {
        lambda: "(9)",
        content: "-297675/8",
        primitive: "7722*Q9 + 594*Q2*Q7 + 27*Q2^2*Q5 + Q2^3*Q3",
        bracket: None,
        misprint: None,
        latex: r"(9) & -\frac{297675}{8} \left(7722 Q_9 + 594 Q_2 Q_7 + 27 Q_2^2 Q_5 + Q_2^3 Q_3\right) \\",
    },
    GoldenRow {
        lambda: "(6,3)",
        content: "-893025/4",
        primitive: "1287*Q3*Q6 + 99*Q2*Q3*Q4 - 4158*Q2*Q7 - 162*Q2^2*Q5 + 5*Q2^3*Q3",
        bracket: None,
        misprint: None,
        latex: r"(6,3) & -\frac{893025}{4} \left(1287 Q_3 Q_6 + 99 Q_2 Q_3 Q_4 - 4158 Q_2 Q_7 - 162 Q_2^2 Q_5 + 5 Q_2^3 Q_3\right) \\",
    },
    GoldenRow {
        lambda: "(5,4)",
        content: "-8037225/8",
        primitive: "286*Q4*Q5 + 66*Q2*Q3*Q4 - 1540*Q2*Q7 - 117*Q2^2*Q5 + 3*Q2^3*Q3",
        bracket: None,
        misprint: None,
        latex: r"(5,4) & -\frac{8037225}{8} \left(286 Q_4 Q_5 + 66 Q_2 Q_3 Q_4 - 1540 Q_2 Q_7 - 117 Q_2^2 Q_5 + 3 Q_2^3 Q_3\right) \\",
    },
    GoldenRow {
        lambda: "(3,3,3)",
        content: "-893025/4",
        primitive: "1287*Q3^3 - 3564*Q2*Q3*Q4 + 3240*Q2^2*Q5 + 10*Q2^3*Q3",
        bracket: None,
        misprint: None,
        latex: r"(3,3,3) & -\frac{893025}{4} \left(1287 Q_3^3 - 3564 Q_2 Q_3 Q_4 + 3240 Q_2^2 Q_5 + 10 Q_2^3 Q_3\right) \\",
    },
];

pub fn all_rows() -> impl Iterator<Item = &'static GoldenRow> {
    EVEN_TABLE.iter().chain(ODD_TABLE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latex;

    #[test]
    fn table_shapes() {
        assert_eq!(EVEN_TABLE.len(), 12);
        assert_eq!(ODD_TABLE.len(), 8);
        for row in all_rows() {
            let h = row.h().unwrap();
            let w = row.partition().size() as i64;
            assert_eq!(h.homogeneous_weight(), Some(w), "{}", row.lambda);
            assert_eq!(row.bracket.is_some(), w % 2 == 0);
        }
    }

    #[test]
    fn text_and_latex_round_trip() {
        for row in all_rows() {
            let h = row.h().unwrap();
            assert_eq!(parse(&h.to_string()).unwrap(), h);
            let b = row.bracket_form();
            assert_eq!(latex::table_row(&row.partition(), &h, b.as_ref()), row.latex);
            let (c, _) = latex::content_and_primitive(&h);
            assert_eq!(c, parse_rational(row.content).unwrap(), "{}", row.lambda);
        }
    }
}

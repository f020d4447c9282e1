//! Full geometric report of a structure as ordered key/value sections plus
//! named verdicts, rendered as text or JSON with identical value strings.

use serde_json::{Map, Value};

use crate::classify::{class_membership, f_tensor, lie_form, nijenhuis, norm_sq_n, norm_sq_nabla_j};
use crate::exec::Execution;
use crate::geometry::{
    bisectional_numerator, curvature_with, levi_civita, nabla_r_with, plane_type, ricci, scalar_curvature,
    sectional_curvature, Plane, PlaneType,
};
use crate::norden::{killing_defect, validate_norden, NordenStructure};
use crate::tensor::{index_label, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub title: String,
    pub rows: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub sections: Vec<Section>,
    pub verdicts: Vec<(String, bool)>,
}

fn nonzero_rows(prefix: &str, t: &Tensor, keep: impl Fn(&[usize]) -> bool) -> Vec<(String, String)> {
    t.nonzero()
        .filter(|(i, _)| keep(i))
        .map(|(i, p)| (format!("{prefix}_{}", index_label(&i, t.dim())), p.to_string()))
        .collect()
}

/// Structural verdicts used by `check`: the Norden conditions and the
/// Jacobi and invariance defects.
pub fn structural_verdicts(s: &NordenStructure) -> Vec<(String, bool)> {
    let v = validate_norden(s);
    let mut out = vec![
        ("j_squared_minus_identity".to_string(), v.j_squared_ok),
        ("norden_compatible".to_string(), v.compatibility_ok),
    ];
    if let Some(ok) = v.signature_ok(s.dim()) {
        out.push(("split_signature".to_string(), ok));
    }
    out.push(("jacobi".to_string(), s.algebra().satisfies_jacobi()));
    out.push(("killing_metric".to_string(), killing_defect(s).is_zero()));
    out
}

impl Report {
    pub fn build(s: &NordenStructure, exec: Execution) -> Report {
        let d = s.dim();
        let mut verdicts = structural_verdicts(s);
        let mut sections = Vec::new();
        let mut section = |title: &str, rows: Vec<(String, String)>| {
            sections.push(Section {
                title: title.to_string(),
                rows,
            })
        };

        section(
            "structure",
            vec![
                ("dim".into(), d.to_string()),
                ("params".into(), s.vars().names().join(", ")),
                ("basis".into(), s.algebra().basis_names().join(", ")),
            ],
        );

        let conn = levi_civita(s);
        section("connection", nonzero_rows("Gamma", conn.gamma(), |_| true));

        let r = curvature_with(s, &conn, exec);
        section("curvature", nonzero_rows("R", &r, |_| true));

        let rho = ricci(s, &r);
        section("ricci", nonzero_rows("rho", &rho, |i| i[0] <= i[1]));
        let tau = scalar_curvature(s, &rho);
        section("scalar", vec![("tau".into(), tau.to_string())]);
        verdicts.push(("scalar_flat".into(), tau.is_zero()));
        verdicts.push(("locally_symmetric".into(), nabla_r_with(s, &conn, &r, exec).is_zero()));

        let f = f_tensor(s, &conn);
        section("fundamental_tensor", nonzero_rows("F", &f, |_| true));
        let theta = lie_form(s, &f);
        section(
            "lie_form",
            theta
                .iter()
                .enumerate()
                .map(|(k, p)| (format!("theta_{}", index_label(&[k], d)), p.to_string()))
                .collect(),
        );

        let n = nijenhuis(s);
        section("nijenhuis", nonzero_rows("N", &n, |i| i[0] < i[1]));

        let nj = norm_sq_nabla_j(s, &f);
        let nn = norm_sq_n(s, &n);
        section(
            "norms",
            vec![
                ("norm_sq_nabla_J".into(), nj.to_string()),
                ("norm_sq_N".into(), nn.to_string()),
            ],
        );

        let classes = class_membership(s, &f, &theta);
        let members: Vec<&str> = [
            ("W0", classes.w0),
            ("W1", classes.w1),
            ("W2", classes.w2),
            ("W3", classes.w3),
        ]
        .iter()
        .filter(|(_, b)| *b)
        .map(|(name, _)| *name)
        .collect();
        let class = if classes.w0 {
            "W0".to_string()
        } else if members.is_empty() {
            "none of W0, W1, W2, W3".to_string()
        } else {
            members.join(", ")
        };
        section("classes", vec![("class".into(), class)]);
        verdicts.extend([
            ("W0".to_string(), classes.w0),
            ("W1".to_string(), classes.w1),
            ("W2".to_string(), classes.w2),
            ("W3".to_string(), classes.w3),
            ("integrable".to_string(), n.is_zero()),
            ("isotropic_kahler".to_string(), nj.is_zero()),
            ("nijenhuis_isotropic".to_string(), nn.is_zero()),
        ]);

        let mut rows = Vec::new();
        let mut holomorphic = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let label = index_label(&[i, j], d);
                let plane = Plane::coordinate(s, i, j);
                let k = sectional_curvature(s, &r, &plane)
                    .map(|k| k.to_string())
                    .unwrap_or_else(|_| "degenerate".into());
                let kind = plane_type(s, &plane).map(PlaneType::as_str).unwrap_or("neither");
                if kind == "holomorphic" {
                    holomorphic.push((i, label.clone()));
                }
                rows.push((format!("k_{label}"), k));
                rows.push((format!("type_{label}"), kind.to_string()));
            }
        }
        section("sectional", rows);

        let mut rows = Vec::new();
        for (a, (i, la)) in holomorphic.iter().enumerate() {
            for (j, lb) in &holomorphic[a + 1..] {
                let x = s.algebra().basis_vector(*i);
                let y = s.algebra().basis_vector(*j);
                rows.push((
                    format!("h_num_{la}_{lb}"),
                    bisectional_numerator(s, &r, &x, &y).to_string(),
                ));
            }
        }
        section("bisectional", rows);

        section(
            "killing",
            vec![("det_B".into(), s.algebra().killing_form().det_bareiss().to_string())],
        );

        Report { sections, verdicts }
    }

    pub fn value(&self, section: &str, key: &str) -> Option<&str> {
        self.sections
            .iter()
            .find(|s| s.title == section)?
            .rows
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn verdict(&self, name: &str) -> Option<bool> {
        self.verdicts.iter().find(|(n, _)| n == name).map(|(_, b)| *b)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            out += &format!("[{}]\n", s.title);
            for (k, v) in &s.rows {
                out += &format!("{k} = {v}\n");
            }
            out.push('\n');
        }
        out += "[verdicts]\n";
        for (k, v) in &self.verdicts {
            out += &format!("{k} = {v}\n");
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut sections = Map::new();
        for s in &self.sections {
            let rows: Map<String, Value> = s
                .rows
                .iter()
                .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                .collect();
            sections.insert(s.title.clone(), Value::Object(rows));
        }
        let verdicts: Map<String, Value> = self
            .verdicts
            .iter()
            .map(|(k, v)| (k.clone(), Value::Bool(*v)))
            .collect();
        let mut root = Map::new();
        root.insert("sections".into(), Value::Object(sections));
        root.insert("verdicts".into(), Value::Object(verdicts));
        Value::Object(root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{family_structure, Family, FamilyParams};
    use crate::poly::int;

    fn numeric(l: [i64; 6]) -> Report {
        let p = FamilyParams::numeric(Family::Table2, &l.map(int)).unwrap();
        Report::build(&family_structure(&p).unwrap(), Execution::default())
    }

    #[test]
    fn unit_first_parameter() {
        let r = numeric([1, 0, 0, 0, 0, 0]);
        assert_eq!(r.value("curvature", "R_2332"), Some("-1/4"));
        assert_eq!(r.value("sectional", "k_14"), Some("1/4"));
        assert_eq!(r.value("sectional", "type_14"), Some("holomorphic"));
        assert_eq!(r.value("scalar", "tau"), Some("0"));
        assert_eq!(r.verdict("W3"), Some(true));
        assert_eq!(r.verdict("W0"), Some(false));
        let json = r.to_json();
        assert_eq!(json["sections"]["curvature"]["R_2332"], "-1/4");
        assert_eq!(json["verdicts"]["locally_symmetric"], true);
    }

    #[test]
    fn zero_parameters_are_kahler_and_flat() {
        let r = numeric([0; 6]);
        assert_eq!(r.value("classes", "class"), Some("W0"));
        assert!(r
            .sections
            .iter()
            .find(|s| s.title == "curvature")
            .unwrap()
            .rows
            .is_empty());
        assert_eq!(r.value("killing", "det_B"), Some("0"));
    }

    #[test]
    fn text_and_json_agree() {
        let r = numeric([1, -2, 0, 3, 0, 1]);
        let text = r.to_text();
        let json = r.to_json();
        for s in &r.sections {
            for (k, v) in &s.rows {
                assert!(text.contains(&format!("{k} = {v}\n")));
                assert_eq!(json["sections"][&s.title][k], v.as_str());
            }
        }
    }
}

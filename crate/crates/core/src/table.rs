//! Class-indexed tables `(μ, ν) ↦ value` and their JSON, CSV and LaTeX forms.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::family::WeightFamily;
use crate::partition::{enumerate_partitions, Partition, PartitionError};
use crate::scalar::Scalar;

/// Square table over the conjugacy classes of `S_n` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTable {
    n: usize,
    d: usize,
    e: Option<usize>,
    family: WeightFamily,
    classes: Vec<Partition>,
    entries: Vec<Vec<Scalar>>,
}

#[derive(Serialize)]
struct Entry<'a> {
    mu: &'a Partition,
    nu: &'a Partition,
    value: &'a Scalar,
}

impl ClassTable {
    pub fn try_build<E>(
        n: usize,
        d: usize,
        e: Option<usize>,
        family: WeightFamily,
        mut cell: impl FnMut(&Partition, &Partition) -> Result<Scalar, E>,
    ) -> Result<ClassTable, E>
    where
        E: From<PartitionError>,
    {
        let classes = enumerate_partitions(n)?;
        let mut entries = Vec::with_capacity(classes.len());
        for mu in &classes {
            let mut row = Vec::with_capacity(classes.len());
            for nu in &classes {
                row.push(cell(mu, nu)?);
            }
            entries.push(row);
        }
        Ok(ClassTable {
            n,
            d,
            e,
            family,
            classes,
            entries,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn e(&self) -> Option<usize> {
        self.e
    }

    pub fn family(&self) -> &WeightFamily {
        &self.family
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    fn index(&self, p: &Partition) -> Option<usize> {
        self.classes.binary_search(p).ok()
    }

    pub fn get(&self, mu: &Partition, nu: &Partition) -> Option<&Scalar> {
        Some(&self.entries[self.index(mu)?][self.index(nu)?])
    }

    /// Cells in row-major canonical order.
    pub fn cells(&self) -> impl Iterator<Item = (&Partition, &Partition, &Scalar)> {
        self.classes.iter().enumerate().flat_map(move |(i, mu)| {
            self.classes
                .iter()
                .enumerate()
                .map(move |(j, nu)| (mu, nu, &self.entries[i][j]))
        })
    }

    /// First cell where the two tables differ.
    pub fn first_difference<'a>(
        &'a self,
        other: &ClassTable,
    ) -> Option<(&'a Partition, &'a Partition, &'a Scalar, Scalar)> {
        self.cells().find_map(|(mu, nu, v)| {
            let w = other.get(mu, nu).cloned().unwrap_or_else(Scalar::zero);
            (v != &w).then_some((mu, nu, v, w))
        })
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["mu", "nu", "value"]).expect("in-memory write");
        for (mu, nu, v) in self.cells() {
            w.write_record([mu.to_string(), nu.to_string(), v.to_string()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("\\begin{{tabular}}{{c|{}}}\n", "c".repeat(self.classes.len())));
        out.push_str("$\\mu \\backslash \\nu$");
        for nu in &self.classes {
            out.push_str(&format!(" & ${nu}$"));
        }
        out.push_str(" \\\\\n\\hline\n");
        for (i, mu) in self.classes.iter().enumerate() {
            out.push_str(&format!("${mu}$"));
            for v in &self.entries[i] {
                out.push_str(&format!(" & ${}$", latex_scalar(v)));
            }
            out.push_str(" \\\\\n");
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

/// Canonical string with `α` spelled as a macro.
pub fn latex_scalar(v: &Scalar) -> String {
    v.to_string().replace('α', "\\alpha ")
}

impl Serialize for ClassTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = self
            .cells()
            .map(|(mu, nu, value)| Entry { mu, nu, value })
            .collect();
        let mut st = s.serialize_struct("ClassTable", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("d", &self.d)?;
        if let Some(e) = self.e {
            st.serialize_field("e", &e)?;
        }
        st.serialize_field("family", &self.family)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilyKind;
    use crate::scalar::int;

    fn diagonal() -> ClassTable {
        let fam = WeightFamily::new(FamilyKind::Classical, vec![int(1)]);
        ClassTable::try_build::<PartitionError>(2, 0, None, fam, |mu, nu| {
            Ok(if mu == nu {
                Scalar::from_rational(mu.z_rational().recip())
            } else {
                Scalar::zero()
            })
        })
        .unwrap()
    }

    #[test]
    fn exports() {
        let t = diagonal();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            concat!(
                r#"{"n":2,"d":0,"family":{"kind":"classical","c":["1"]},"entries":["#,
                r#"{"mu":[2],"nu":[2],"value":"1/2"},{"mu":[2],"nu":[1,1],"value":"0"},"#,
                r#"{"mu":[1,1],"nu":[2],"value":"0"},{"mu":[1,1],"nu":[1,1],"value":"1/2"}]}"#
            )
        );
        assert_eq!(
            t.to_csv(),
            "mu,nu,value\n[2],[2],1/2\n[2],\"[1,1]\",0\n\"[1,1]\",[2],0\n\"[1,1]\",\"[1,1]\",1/2\n"
        );
        assert!(t.to_latex().starts_with("\\begin{tabular}{c|cc}"));
        assert!(t.first_difference(&t).is_none());
    }
}

//! Everything computed about one group, assembled on demand.

use std::cell::OnceCell;
use std::sync::Arc;

use crate::automata::{self, GateTable, ReducedWordAutomaton};
use crate::error::Result;
use crate::shadows::{self, ShadowKind, ShadowSet, Shadows};
use crate::system::CoxeterSystem;

/// `|E| |S| |L| |L0| |Gamma| |Gamma0|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub elementary: usize,
    pub super_elementary: usize,
    pub low: usize,
    pub tight_low: usize,
    pub gates: usize,
    pub tight_gates: usize,
}

impl TableRow {
    pub fn as_array(&self) -> [usize; 6] {
        [self.elementary, self.super_elementary, self.low, self.tight_low, self.gates, self.tight_gates]
    }
}

impl std::fmt::Display for TableRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let a = self.as_array();
        write!(f, "{} {} {} {} {} {}", a[0], a[1], a[2], a[3], a[4], a[5])
    }
}

pub struct GroupAnalysis {
    shadows: Shadows,
    raw: OnceCell<ReducedWordAutomaton>,
    minimized: OnceCell<(ReducedWordAutomaton, Vec<usize>)>,
    gate_table: OnceCell<GateTable>,
}

impl GroupAnalysis {
    pub fn new(sys: Arc<CoxeterSystem>) -> Self {
        GroupAnalysis {
            shadows: Shadows::new(sys),
            raw: OnceCell::new(),
            minimized: OnceCell::new(),
            gate_table: OnceCell::new(),
        }
    }

    pub fn sys(&self) -> &CoxeterSystem {
        self.shadows.sys()
    }

    pub fn shadows(&self) -> &Shadows {
        &self.shadows
    }

    pub fn catalog(&self) -> &crate::catalog::Catalog {
        self.shadows.catalog()
    }

    pub fn raw_automaton(&self) -> &ReducedWordAutomaton {
        self.raw.get_or_init(|| automata::build_bh_automaton(self.catalog()))
    }

    pub fn minimized(&self) -> &ReducedWordAutomaton {
        &self.minimized.get_or_init(|| automata::minimize(self.raw_automaton())).0
    }

    /// Raw state to class.
    pub fn class_map(&self) -> &[usize] {
        self.minimized();
        &self.minimized.get().expect("initialised").1
    }

    pub fn gate_table(&self) -> Result<&GateTable> {
        if let Some(t) = self.gate_table.get() {
            return Ok(t);
        }
        let t = automata::gates(self.sys(), self.minimized())?;
        Ok(self.gate_table.get_or_init(|| t))
    }

    pub fn gates(&self) -> Result<ShadowSet> {
        Ok(ShadowSet::new(ShadowKind::Gates, self.gate_table()?.gates()))
    }

    pub fn tight_gates_from_automaton(&self) -> Result<ShadowSet> {
        Ok(shadows::tight(self.catalog(), &self.gates()?))
    }

    pub fn low(&self) -> &ShadowSet {
        self.shadows.low()
    }

    pub fn tight_low(&self) -> ShadowSet {
        shadows::tight(self.catalog(), self.low())
    }

    pub fn tight_gates(&self) -> &ShadowSet {
        &self.shadows.tight_gate_search().tight_gates
    }

    pub fn table_row(&self) -> Result<TableRow> {
        let search = self.shadows.tight_gate_search();
        Ok(TableRow {
            elementary: self.catalog().elementary().0.len(),
            super_elementary: search.super_elementary.len(),
            low: self.low().len(),
            tight_low: self.tight_low().len(),
            gates: self.gate_table()?.len(),
            tight_gates: search.tight_gates.len(),
        })
    }

    /// The minimized automaton with the minimal word of each class attached.
    pub fn annotated_minimized(&self) -> Result<ReducedWordAutomaton> {
        let mut m = self.minimized().clone();
        automata::annotate(self.sys(), &mut m, self.gate_table()?);
        Ok(m)
    }
}

//! Argument grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Comma-separated integers, e.g. `1,0,-2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntList(pub Vec<i64>);

fn int_list(s: &str) -> Result<IntList, String> {
    if s.trim().is_empty() {
        return Ok(IntList(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("{t:?} is not an integer")))
        .collect::<Result<_, _>>()
        .map(IntList)
}

#[derive(Parser, Debug)]
#[command(name = "liekit", version, about = "Root systems, weight multiplicities, branching rules and affine q-series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Recurrence,
    Freudenthal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Irreducible,
    Verma,
    Parabolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    FiniteMults,
    Branching,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct Limit {
    /// Grade limit for affine algebras, height limit for Verma-type modules.
    #[arg(long, env = "LIEKIT_GRADE_LIMIT", default_value_t = 10)]
    pub limit: u32,
}

#[derive(Args, Debug)]
pub struct Labels {
    /// Dynkin labels of the highest weight, `α₀` first for affine algebras.
    #[arg(long, value_parser = int_list, allow_hyphen_values = true)]
    pub labels: IntList,
}

#[derive(Args, Debug)]
pub struct Sub {
    /// Subalgebra generated by these simple roots (1-based).
    #[arg(long, value_parser = int_list, conflicts_with = "sub_roots")]
    pub sub_index: Option<IntList>,
    /// Subalgebra generated by explicit simple roots, as a JSON list of
    /// coordinate lists.
    #[arg(long, allow_hyphen_values = true)]
    pub sub_roots: Option<String>,
}

#[derive(Args, Debug)]
pub struct ModuleArgs {
    #[command(flatten)]
    pub labels: Labels,
    #[arg(long, value_enum, default_value_t = KindArg::Irreducible)]
    pub kind: KindArg,
    /// Index set of a parabolic Verma module.
    #[arg(long, value_parser = int_list)]
    pub parabolic_index: Option<IntList>,
    #[command(flatten)]
    pub limit: Limit,
    #[arg(long, value_enum, default_value_t = AlgorithmArg::Recurrence)]
    pub algorithm: AlgorithmArg,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Highest weight labels; repeat for several modules.
    #[arg(long, value_parser = int_list, allow_hyphen_values = true, required = true)]
    pub labels: Vec<IntList>,
    #[command(flatten)]
    pub limit: Limit,
    /// Worker threads for independent modules.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Positive roots (affine roots up to the grade limit).
    Roots {
        algebra: String,
        #[command(flatten)]
        limit: Limit,
        #[command(flatten)]
        out: Output,
    },
    /// Cartan matrix.
    Cartan {
        algebra: String,
        #[command(flatten)]
        out: Output,
    },
    /// Weyl vector.
    Rho {
        algebra: String,
        #[command(flatten)]
        out: Output,
    },
    /// Multiplicities of the weights in the main chamber.
    Mults {
        algebra: String,
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Full formal character.
    Character {
        algebra: String,
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Dimension of a finite-dimensional irreducible module.
    Dim {
        algebra: String,
        #[command(flatten)]
        labels: Labels,
        #[command(flatten)]
        out: Output,
    },
    /// Branching coefficients for a subalgebra.
    Branch {
        algebra: String,
        #[command(flatten)]
        labels: Labels,
        #[command(flatten)]
        sub: Sub,
        #[command(flatten)]
        limit: Limit,
        #[command(flatten)]
        out: Output,
    },
    /// Decomposition of a tensor product of irreducible modules.
    Tensor {
        algebra: String,
        /// Labels of a factor; repeat for several factors.
        #[arg(long, value_parser = int_list, allow_hyphen_values = true, required = true)]
        labels: Vec<IntList>,
        /// Number of times the factor list is repeated.
        #[arg(long, default_value_t = 1)]
        power: usize,
        #[command(flatten)]
        out: Output,
    },
    /// String functions of affine irreducible modules.
    StringFunctions {
        algebra: String,
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Recurrence)]
        algorithm: AlgorithmArg,
        #[command(flatten)]
        out: Output,
    },
    /// Branching functions of affine irreducible modules.
    BranchingFunctions {
        algebra: String,
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        sub: Sub,
        #[command(flatten)]
        out: Output,
    },
    /// Timing table comparing two methods.
    Bench {
        #[arg(long, value_enum, default_value_t = Suite::FiniteMults)]
        suite: Suite,
        /// Problem sizes; an empty list gives an empty table.
        #[arg(long, value_parser = int_list, default_value = "1,2,3,4")]
        sizes: IntList,
        #[command(flatten)]
        out: Output,
    },
}

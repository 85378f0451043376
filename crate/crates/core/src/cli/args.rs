use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

/// `--n` accepts a single value or an inclusive range `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: i64,
    pub hi: i64,
}

impl NRange {
    pub fn single(&self) -> Option<i64> {
        (self.lo == self.hi).then_some(self.lo)
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("expected an integer or a..b, got {s:?}"))
        };
        match s.split_once("..") {
            Some((a, b)) => {
                let (lo, hi) = (parse(a)?, parse(b)?);
                if lo > hi {
                    return Err(format!("empty range {s:?}"));
                }
                Ok(NRange { lo, hi })
            }
            None => {
                let v = parse(s)?;
                Ok(NRange { lo: v, hi: v })
            }
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ipgp",
    version,
    about = "Exact independence polynomials of generalized Petersen graphs GP(n,k)"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Result cache directory (IPGP_CACHE_DIR overrides)
    #[arg(long, global = true, default_value = crate::cache::DEFAULT_CACHE_DIR)]
    pub cache_dir: PathBuf,
    /// Fractional bits for root finding
    #[arg(long, global = true, default_value_t = crate::roots::DEFAULT_PRECISION_BITS)]
    pub precision_bits: u32,
    /// Worker threads (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct Instance {
    #[arg(long)]
    pub n: NRange,
    #[arg(long, value_delimiter = ',', required = true)]
    pub k: Vec<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute Ind(GP(n,k), x) and write it as JSON
    Compute {
        #[command(flatten)]
        inst: Instance,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check the transfer matrix against brute-force enumeration
    Verify {
        #[command(flatten)]
        inst: Instance,
    },
    /// Locate all complex roots; CSV and optional SVG plot
    Roots {
        #[command(flatten)]
        inst: Instance,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Test the parity prediction over a grid of (n, k)
    Sweep {
        #[command(flatten)]
        inst: Instance,
        /// Output directory for sweep.csv and sweep.json
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_range_parsing() {
        assert_eq!("5".parse::<NRange>(), Ok(NRange { lo: 5, hi: 5 }));
        assert_eq!("20..30".parse::<NRange>(), Ok(NRange { lo: 20, hi: 30 }));
        assert!("30..20".parse::<NRange>().is_err());
        assert!("a..b".parse::<NRange>().is_err());
        assert_eq!("7..7".parse::<NRange>().unwrap().single(), Some(7));
    }

    #[test]
    fn k_list() {
        let cli = Cli::try_parse_from(["ipgp", "sweep", "--n", "5..12", "--k", "1,2,3,4"]).unwrap();
        match cli.command {
            Command::Sweep { inst, .. } => assert_eq!(inst.k, vec![1, 2, 3, 4]),
            other => panic!("{other:?}"),
        }
    }
}

//! Command line front end: regularise partitions, render abacus displays
//! and ladder labels, trace bead-moving steps, enumerate regularisation
//! classes, and run the exhaustive verification suite.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check (or an
//! operation cannot run), 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use eireg::{
    classes, ladder_labels, regularise, verify, AbacusDisplay, EiParams, Partition, PhiTrace,
};

#[derive(Parser)]
#[command(name = "eireg", version, about = "Generalised (e,i)-regularisation of integer partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the (e,i)-regularisation of a partition
    Reg {
        /// Partition, e.g. 14,13,5,4^5,3,1^2 ("-" for the empty partition)
        partition: String,
        #[arg(short = 'e', long = "e", value_name = "E")]
        e: usize,
        #[arg(short = 'i', long = "i", value_name = "I")]
        i: usize,
        /// Print the result as JSON, including every step trace
        #[arg(long)]
        json: bool,
        /// Print one line per bead-moving step
        #[arg(long)]
        steps: bool,
    },
    /// Print the e-abacus display of a partition ('b' bead, 'n' empty)
    Abacus {
        partition: String,
        #[arg(short = 'e', long = "e", value_name = "E")]
        e: usize,
        /// Bead count (default: number of parts, at least 1)
        #[arg(short = 's', long = "s", value_name = "S")]
        s: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print the Young diagram with each cell labelled by its ladder index
    Ladders {
        partition: String,
        #[arg(short = 'e', long = "e", value_name = "E")]
        e: usize,
        #[arg(short = 'i', long = "i", value_name = "I")]
        i: usize,
        #[arg(long)]
        json: bool,
    },
    /// List the (e,i)-hooks of a partition
    Hooks {
        partition: String,
        #[arg(short = 'e', long = "e", value_name = "E")]
        e: usize,
        #[arg(short = 'i', long = "i", value_name = "I")]
        i: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run one bead-moving step and print its trace
    #[command(name = "trace-phi")]
    TracePhi {
        partition: String,
        #[arg(short = 'e', long = "e", value_name = "E")]
        e: usize,
        #[arg(short = 'i', long = "i", value_name = "I")]
        i: usize,
        /// Bead count (default: number of parts, at least 1)
        #[arg(short = 's', long = "s", value_name = "S")]
        s: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Group all partitions of n into (e,i)-regularisation classes
    Classes {
        n: usize,
        #[arg(short = 'e', long = "e", value_name = "E")]
        e: usize,
        #[arg(short = 'i', long = "i", value_name = "I")]
        i: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check the structural invariants on all partitions of n
    Verify {
        n: usize,
        #[arg(short = 'e', long = "e", value_name = "E")]
        e: usize,
        #[arg(short = 'i', long = "i", value_name = "I", conflicts_with = "all_i")]
        i: Option<usize>,
        /// Run for every i with 0 < i < e
        #[arg(long = "all-i")]
        all_i: bool,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes, e.g. under `eireg ... | head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Usage-level failures (bad partition text, bad parameters) surface as
/// `Err` and exit 2; operational outcomes pick their own exit code.
fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Reg {
            partition,
            e,
            i,
            json,
            steps,
        } => {
            let lambda = parse_partition(&partition)?;
            let params = parse_params(e, i)?;
            let result = regularise(&lambda, params).map_err(|err| err.to_string())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&result).expect("serialisable"));
            } else {
                if steps {
                    for (idx, trace) in result.steps.iter().enumerate() {
                        print_step(idx + 1, trace);
                    }
                }
                println!("{}", result.output);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Abacus { partition, e, s, json } => {
            let lambda = parse_partition(&partition)?;
            if e < 2 {
                return Err(format!("need e >= 2, got {e}"));
            }
            let display = make_display(&lambda, e, s)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&display).expect("serialisable"));
            } else {
                println!("{}", display.render());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ladders { partition, e, i, json } => {
            let lambda = parse_partition(&partition)?;
            let params = parse_params(e, i)?;
            if json {
                let labels = ladder_labels(&lambda, params);
                println!("{}", serde_json::to_string_pretty(&labels).expect("serialisable"));
            } else {
                print!("{}", render_ladders(&lambda, params));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hooks { partition, e, i, json } => {
            let lambda = parse_partition(&partition)?;
            let params = parse_params(e, i)?;
            let witnesses: Vec<_> = lambda
                .ei_hooks(params)
                .into_iter()
                .map(|(node, k)| {
                    let info = lambda.hook_info(node).expect("hook scan yields diagram cells");
                    (node, k, info)
                })
                .collect();
            if json {
                let values: Vec<serde_json::Value> = witnesses
                    .iter()
                    .map(|(node, k, info)| {
                        serde_json::json!({
                            "row": node.row,
                            "col": node.col,
                            "k": k,
                            "hook": info.hook_len,
                            "arm": info.arm_len,
                            "leg": info.leg_len,
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&values).expect("serialisable"));
            } else {
                for (node, k, info) in &witnesses {
                    println!(
                        "{node} k={k} hook={} arm={} leg={}",
                        info.hook_len, info.arm_len, info.leg_len
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::TracePhi { partition, e, i, s, json } => {
            let lambda = parse_partition(&partition)?;
            let params = parse_params(e, i)?;
            let display = make_display(&lambda, params.e(), s)?;
            match display.phi_step(params.i()) {
                Ok((after, trace)) => {
                    if json {
                        println!("{}", serde_json::to_string_pretty(&trace).expect("serialisable"));
                    } else {
                        print_trace(&trace);
                        println!("result: {}", after.partition());
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(err) => {
                    eprintln!("{err}");
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Classes { n, e, i, json } => {
            let params = parse_params(e, i)?;
            let found = classes(n, params).map_err(|err| err.to_string())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&found).expect("serialisable"));
            } else {
                for class in &found {
                    let members: Vec<String> =
                        class.members.iter().map(|m| m.to_string()).collect();
                    println!("{}", members.join(" "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n, e, i, all_i, json } => {
            if e < 2 {
                return Err(format!("need e >= 2, got {e}"));
            }
            let i_values: Vec<usize> = match (i, all_i) {
                (Some(i), false) => vec![i],
                (None, true) => (1..e).collect(),
                (None, false) => {
                    return Err("pass -i I or --all-i".to_string());
                }
                (Some(_), true) => unreachable!("clap rejects the combination"),
            };
            let mut reports = Vec::with_capacity(i_values.len());
            for i in i_values {
                let params = parse_params(e, i)?;
                reports.push(verify(n, params));
            }
            let all_pass = reports.iter().all(|r| r.all_pass());
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).expect("serialisable"));
            } else {
                for report in &reports {
                    print!("{report}");
                }
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    text.parse().map_err(|err| format!("{err}"))
}

fn parse_params(e: usize, i: usize) -> Result<EiParams, String> {
    EiParams::new(e, i).map_err(|err| err.to_string())
}

fn make_display(lambda: &Partition, e: usize, s: Option<usize>) -> Result<AbacusDisplay, String> {
    let beads = s.unwrap_or_else(|| lambda.num_parts().max(1));
    AbacusDisplay::from_partition(lambda, e, beads).map_err(|err| err.to_string())
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn print_trace(trace: &PhiTrace) {
    println!("s1 = {}", trace.s1);
    println!("s_list = {}", join(&trace.s_list));
    println!("x_list = {}", join(&trace.x_list));
    println!("b_list = {}", join(&trace.b_list));
    println!("t_prefix = {}", join(&trace.t_prefix));
    println!("c = {}", trace.c);
    println!("before:");
    println!("{}", trace.before.render());
    println!("after:");
    println!("{}", trace.after.render());
}

fn print_step(index: usize, trace: &PhiTrace) {
    println!(
        "step {index}: e={} i={} s1={} c={} b={} t={} -> {}",
        trace.before.e(),
        trace.s_list.len(),
        trace.s1,
        trace.c,
        join(&trace.b_list),
        join(&trace.t_prefix),
        trace.after.partition()
    );
}

/// Young diagram with one right-aligned ladder label per cell: the bare
/// index l for coprime parameters, or the full key with residue otherwise.
fn render_ladders(lambda: &Partition, params: EiParams) -> String {
    let labels = ladder_labels(lambda, params);
    let text: Vec<Vec<String>> = labels
        .iter()
        .map(|row| {
            row.iter()
                .map(|key| {
                    if params.is_coprime() {
                        key.l.to_string()
                    } else {
                        key.to_string()
                    }
                })
                .collect()
        })
        .collect();
    let width = text.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for row in &text {
        let line: Vec<String> = row
            .iter()
            .map(|label| format!("{:>width$}", label, width = width))
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

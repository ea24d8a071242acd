//! `qmon`: command-line access to the queue-monoid library.
//!
//! Words use lowercase letters for writes and uppercase for reads; `e` or
//! the empty string is the empty word. Predicates print one lowercase word
//! and exit with 0 (true) or 1 (false); errors exit with 2.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use queue_monoid::automata::format::{dfa_to_dot, dfa_to_text, nfa_to_dot, nfa_to_text, parse_nfa};
use queue_monoid::automata::{class_dfa, rational_member, Dfa, Nfa};
use queue_monoid::conjugacy::{conjugate, conjugator_nfa, find_conjugator};
use queue_monoid::embed::embed_q2;
use queue_monoid::oracle::{equiv_oracle, equiv_oracle_bounded};
use queue_monoid::recognizability::{
    compile_simple, eval_simple, in_omega, k_shuffled, parse_simple,
};
use queue_monoid::rewrite::{rewrite_normalize, rewrite_trace};
use queue_monoid::{act, Alphabet, QueueState, Word};

#[derive(Parser, Debug)]
#[command(
    name = "qmon",
    version,
    about = "Compute in the monoid of queue actions"
)]
struct Cli {
    /// Base letters, at least two distinct lowercase letters.
    #[arg(long, short, global = true, default_value = "ab")]
    alphabet: String,

    /// Print automata in Graphviz DOT instead of the text format.
    #[arg(long, global = true)]
    dot: bool,

    /// Longest queue tried by `eq --oracle` (default |W1| + |W2|).
    #[arg(long, global = true, value_name = "N")]
    oracle_bound: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of W.
    Nf {
        word: String,
        /// Also print every rewrite step.
        #[arg(long)]
        trace: bool,
    },
    /// Run W on the queue Q (lowercase letters); prints the queue or BOT.
    Act { queue: String, word: String },
    /// Print the normal form of the product W1 W2.
    Mul { left: String, right: String },
    /// Decide W1 ≡ W2.
    Eq {
        left: String,
        right: String,
        /// Compare on all short queues instead of normal forms.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide whether [W1] and [W2] are conjugate.
    Conj { left: String, right: String },
    /// Print some Z with [W1] Z = Z [W2], or NONE.
    Conjwitness { left: String, right: String },
    /// Emit the automaton of all normal-form conjugators.
    Conjset { left: String, right: String },
    /// Emit the automaton accepting the class of W.
    Classdfa { word: String },
    /// Decide whether some word of the automaton in FILE is equivalent to W.
    Member {
        word: String,
        #[arg(long, value_name = "FILE")]
        nfa: PathBuf,
    },
    /// Decide [W] ∈ Ω_K.
    Omega { k: usize, word: String },
    /// Decide whether W is K-shuffled.
    Kshuffled { k: usize, word: String },
    /// Print the image of W over {a, b}.
    Embed2 { word: String },
    /// Evaluate a simple-set expression on W, or compile it.
    Simple {
        expr: String,
        word: Option<String>,
        /// Emit the compiled automaton instead of evaluating.
        #[arg(long)]
        compile: bool,
    },
}

enum Outcome {
    Done,
    Holds(bool),
}

fn verdict(holds: bool, yes: &str, no: &str) -> Outcome {
    println!("{}", if holds { yes } else { no });
    Outcome::Holds(holds)
}

fn print_nfa(nfa: &Nfa, dot: bool) {
    print!(
        "{}",
        if dot {
            nfa_to_dot(nfa)
        } else {
            nfa_to_text(nfa)
        }
    );
}

fn print_dfa(dfa: &Dfa, dot: bool) {
    print!(
        "{}",
        if dot {
            dfa_to_dot(dfa)
        } else {
            dfa_to_text(dfa)
        }
    );
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    let ab = Alphabet::new(&cli.alphabet).map_err(|e| e.to_string())?;
    let word = |s: &str| ab.parse_word(s).map_err(|e| format!("{s:?}: {e}"));
    let show = |w: &Word| ab.format_word(w);
    match &cli.command {
        Command::Nf { word: w, trace } => {
            let w = word(w)?;
            if *trace {
                for step in rewrite_trace(&w) {
                    println!(
                        "{:?} at {}: {}",
                        step.rule,
                        step.position,
                        show(&step.result)
                    );
                }
            }
            println!("{}", show(&rewrite_normalize(&w).to_word()));
        }
        Command::Act { queue, word: w } => {
            let q = QueueState::Content(ab.parse_letters(queue).map_err(|e| e.to_string())?);
            match act(&q, &word(w)?) {
                QueueState::Content(c) => println!("{}", ab.format_letters(&c)),
                QueueState::Bottom => println!("BOT"),
            }
        }
        Command::Mul { left, right } => {
            let p = rewrite_normalize(&word(left)?).mul(&rewrite_normalize(&word(right)?));
            println!("{}", show(&p.to_word()));
        }
        Command::Eq {
            left,
            right,
            oracle,
        } => {
            let (u, v) = (word(left)?, word(right)?);
            let same = if *oracle {
                match cli.oracle_bound {
                    Some(n) => equiv_oracle_bounded(&ab, &u, &v, n),
                    None => equiv_oracle(&ab, &u, &v),
                }
            } else {
                rewrite_normalize(&u) == rewrite_normalize(&v)
            };
            return Ok(verdict(same, "equivalent", "inequivalent"));
        }
        Command::Conj { left, right } => {
            let (p, q) = (
                rewrite_normalize(&word(left)?),
                rewrite_normalize(&word(right)?),
            );
            return Ok(verdict(conjugate(&p, &q), "conjugate", "not-conjugate"));
        }
        Command::Conjwitness { left, right } => {
            let (p, q) = (
                rewrite_normalize(&word(left)?),
                rewrite_normalize(&word(right)?),
            );
            return match find_conjugator(&ab, &p, &q).map_err(|e| e.to_string())? {
                Some(z) => {
                    println!("{}", show(&z.to_word()));
                    Ok(Outcome::Holds(true))
                }
                None => {
                    println!("NONE");
                    Ok(Outcome::Holds(false))
                }
            };
        }
        Command::Conjset { left, right } => {
            let (p, q) = (
                rewrite_normalize(&word(left)?),
                rewrite_normalize(&word(right)?),
            );
            print_nfa(&conjugator_nfa(&ab, &p, &q).nfa, cli.dot);
        }
        Command::Classdfa { word: w } => {
            print_dfa(
                &class_dfa(&ab, &word(w)?).map_err(|e| e.to_string())?,
                cli.dot,
            );
        }
        Command::Member { word: w, nfa } => {
            let text = fs::read_to_string(nfa).map_err(|e| format!("{}: {e}", nfa.display()))?;
            let (file_ab, automaton) =
                parse_nfa(&text).map_err(|e| format!("{}: {e}", nfa.display()))?;
            if file_ab != ab {
                return Err(format!(
                    "{} is over alphabet {file_ab}, expected {ab}",
                    nfa.display()
                ));
            }
            return Ok(verdict(rational_member(&word(w)?, &automaton), "yes", "no"));
        }
        Command::Omega { k, word: w } => {
            let q = rewrite_normalize(&word(w)?);
            return Ok(verdict(in_omega(&q, *k), "in", "out"));
        }
        Command::Kshuffled { k, word: w } => {
            return Ok(verdict(k_shuffled(&word(w)?, *k), "yes", "no"));
        }
        Command::Embed2 { word: w } => {
            let image = embed_q2(&ab, &word(w)?).map_err(|e| e.to_string())?;
            println!("{}", Alphabet::binary().format_word(&image));
        }
        Command::Simple {
            expr,
            word: w,
            compile,
        } => {
            let e = parse_simple(&ab, expr).map_err(|e| e.to_string())?;
            if *compile {
                print_dfa(
                    &compile_simple(&ab, &e).map_err(|e| e.to_string())?,
                    cli.dot,
                );
            } else {
                let w = w
                    .as_deref()
                    .ok_or("a word is required unless --compile is given")?;
                let q = rewrite_normalize(&word(w)?);
                return Ok(verdict(eval_simple(&e, &q), "in", "out"));
            }
        }
    }
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Done | Outcome::Holds(true)) => ExitCode::SUCCESS,
        Ok(Outcome::Holds(false)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mfw_core::automata::{strip_sinks, AutomatonJson, ToDot};
use mfw_core::factor_automaton::build_factor_automaton;
use mfw_core::fibonacci::{verify_fibonacci, MAX_FIBONACCI_INDEX};
use mfw_core::l_automaton::{circular_factor_dfa, l_automaton};
use mfw_core::mfw::{mfw_circular, mfw_linear, MfwJson, MfwSet, SourceKind};
use mfw_core::reconstruction::{reconstruct_circular, reconstruct_word};
use mfw_core::verify::exhaustive;
use mfw_core::{Alphabet, CircularWord, Error, Trie, Word};

/// Minimal forbidden factors, factor automata and reconstruction for
/// linear and circular words.
#[derive(Parser)]
#[command(name = "antidict", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the minimal forbidden factors of a word.
    Mfw {
        word: String,
        #[command(flatten)]
        opts: WordOpts,
        #[arg(long)]
        json: bool,
    },
    /// Build the factor automaton of a word.
    Automaton {
        word: String,
        #[command(flatten)]
        opts: WordOpts,
        #[arg(long, conflicts_with = "circular")]
        linear: bool,
        #[command(flatten)]
        out: AutomatonOut,
    },
    /// Run the L-automaton construction on a trie read from JSON.
    LAutomaton {
        #[arg(long, value_name = "PATH")]
        from_trie: PathBuf,
        /// Remove the absorbing sink states.
        #[arg(long)]
        strip: bool,
        #[command(flatten)]
        out: AutomatonOut,
    },
    /// Recover a word from its minimal forbidden factors.
    Reconstruct {
        /// Inline JSON, a file path, or `-` for stdin.
        #[arg(long)]
        mfw: String,
        /// Treat the set as circular even if the JSON says otherwise.
        #[arg(long)]
        circular: bool,
    },
    /// Check the Fibonacci identities for one index or a range.
    FibCheck {
        #[arg(long, conflicts_with = "upto", required_unless_present = "upto")]
        n: Option<usize>,
        #[arg(long)]
        upto: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run the property sweep over all small words.
    Verify {
        #[arg(long, required = true)]
        exhaustive: bool,
        #[arg(long, default_value_t = 10)]
        maxlen: usize,
    },
}

#[derive(Args)]
struct WordOpts {
    /// Alphabet letters; defaults to the letters of the word.
    #[arg(long)]
    alphabet: Option<String>,
    #[arg(long)]
    circular: bool,
}

#[derive(Args)]
struct AutomatonOut {
    /// Write Graphviz output to this file.
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
    #[arg(long)]
    stats: bool,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InfiniteLanguage
            | Error::AmbiguousLongestPath
            | Error::NoCycle
            | Error::VerificationMismatch => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("antidict: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("antidict: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Mfw { word, opts, json } => cmd_mfw(&word, &opts, json),
        Command::Automaton { word, opts, linear: _, out } => cmd_automaton(&word, &opts, &out),
        Command::LAutomaton { from_trie, strip, out } => cmd_l_automaton(&from_trie, strip, &out),
        Command::Reconstruct { mfw, circular } => cmd_reconstruct(&mfw, circular),
        Command::FibCheck { n, upto, json } => {
            let range = match (n, upto) {
                (Some(n), _) => n..=n,
                (None, Some(k)) => 1..=k,
                (None, None) => unreachable!("clap requires one of --n/--upto"),
            };
            cmd_fib_check(range, json)
        }
        Command::Verify { exhaustive: _, maxlen } => cmd_verify(maxlen),
    }
}

fn parse_input(word: &str, opts: &WordOpts) -> Result<(Alphabet, Word), Failure> {
    let alphabet = match &opts.alphabet {
        Some(letters) => Alphabet::new(letters.chars())?,
        None => Alphabet::of_letters(word)?,
    };
    let w = alphabet.parse_word(word)?;
    if w.is_empty() {
        return Err(Error::EmptyWord.into());
    }
    Ok((alphabet, w))
}

fn compute_mfw(word: &str, opts: &WordOpts) -> Result<MfwSet, Failure> {
    let (alphabet, w) = parse_input(word, opts)?;
    Ok(if opts.circular {
        mfw_circular(&CircularWord::new(w)?, &alphabet)?
    } else {
        mfw_linear(&w, &alphabet)?
    })
}

fn cmd_mfw(word: &str, opts: &WordOpts, json: bool) -> Outcome {
    let set = compute_mfw(word, opts)?;
    if json {
        let text = serde_json::to_string_pretty(&set.to_json()).map_err(Error::from)?;
        println!("{text}");
    } else {
        for m in set.rendered() {
            println!("{m}");
        }
    }
    Ok(())
}

fn emit(dot: String, states: usize, out: &AutomatonOut) -> Outcome {
    if let Some(path) = &out.dot {
        fs::write(path, &dot)?;
    }
    if out.stats {
        println!("states={states}");
    }
    if out.dot.is_none() && !out.stats {
        print!("{dot}");
    }
    Ok(())
}

fn cmd_automaton(word: &str, opts: &WordOpts, out: &AutomatonOut) -> Outcome {
    let (alphabet, w) = parse_input(word, opts)?;
    let dfa = if opts.circular {
        circular_factor_dfa(&CircularWord::new(w)?, &alphabet)?
    } else {
        build_factor_automaton(&w, &alphabet)?
    };
    emit(dfa.to_dot(), dfa.num_states(), out)
}

fn cmd_l_automaton(path: &PathBuf, strip: bool, out: &AutomatonOut) -> Outcome {
    let text = fs::read_to_string(path)?;
    let trie = Trie::from_json(&AutomatonJson::parse(&text)?)?;
    let mut dfa = l_automaton(&trie)?;
    if strip {
        dfa = strip_sinks(&dfa);
    }
    emit(dfa.to_dot(), dfa.num_states(), out)
}

fn read_mfw_arg(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg)
            .map_err(|e| Failure::Input(format!("cannot read --mfw {arg:?} as JSON or file: {e}")))
    }
}

fn cmd_reconstruct(arg: &str, force_circular: bool) -> Outcome {
    let text = read_mfw_arg(arg)?;
    let mut json: MfwJson = serde_json::from_str(&text).map_err(Error::from)?;
    json.circular |= force_circular;
    let set = MfwSet::from_json(&json)?;
    // reject non-antifactorial input before attempting reconstruction
    set.trie()?;
    let alphabet = set.alphabet();
    match set.kind() {
        SourceKind::Linear => println!("{}", alphabet.render(&reconstruct_word(&set)?)),
        SourceKind::Circular => {
            println!("{}", alphabet.render(reconstruct_circular(&set)?.linearization()))
        }
    }
    Ok(())
}

fn cmd_fib_check(range: std::ops::RangeInclusive<usize>, json: bool) -> Outcome {
    if *range.end() > MAX_FIBONACCI_INDEX {
        return Err(Error::GuardExceeded {
            what: "Fibonacci index",
            limit: MAX_FIBONACCI_INDEX,
            requested: *range.end(),
        }
        .into());
    }
    if *range.start() == 0 {
        return Err(Error::IndexTooSmall { index: 0, min: 1 }.into());
    }
    let reports = range.map(verify_fibonacci).collect::<mfw_core::Result<Vec<_>>>()?;
    if json {
        let text = serde_json::to_string_pretty(&reports).map_err(Error::from)?;
        println!("{text}");
    } else {
        println!("{:>3} {:>8} {:>4} {:>9} {:>9}  result  mfw", "n", "|f_n|", "|M|", "circular", "linear");
        for r in &reports {
            let mfw = if r.mfw.len() <= 8 { r.mfw.join(" ") } else { format!("{} words", r.mfw.len()) };
            println!(
                "{:>3} {:>8} {:>4} {:>9} {:>9}  {:<6}  {}",
                r.n,
                r.length,
                r.mfw_count,
                r.circular_states,
                r.linear_states,
                if r.passed() { "pass" } else { "FAIL" },
                mfw
            );
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Verification("some Fibonacci checks failed".into()))
    }
}

fn cmd_verify(maxlen: usize) -> Outcome {
    let report = exhaustive(maxlen)?;
    for (name, c) in &report.checks {
        let status = if c.failures == 0 { "pass" } else { "FAIL" };
        print!("{status}  {name}: {} cases, {} failures", c.cases, c.failures);
        match &c.first_failure {
            Some(w) => println!(" (first: {w})"),
            None => println!(),
        }
    }
    if report.passed() {
        println!("all {} checks passed up to length {maxlen}", report.checks.len());
        Ok(())
    } else {
        Err(Failure::Verification("exhaustive verification found failures".into()))
    }
}

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Julia(a) => commands::julia(a),
        Command::MandelSlice(a) => commands::mandel_slice(a),
        Command::MandelLattice(a) => commands::mandel_lattice(a),
        Command::Zoom(a) => commands::zoom(a),
        Command::FixedMap(a) => commands::fixed_map(a),
        Command::Hybrid(a) => commands::hybrid(a),
        Command::ErrorSweep(a) => commands::error_sweep(a),
        Command::Converge(a) => commands::converge(a),
        Command::Classify(a) => commands::classify(a),
        Command::Dimension(a) => commands::dimension(a),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();

    let result = match cli.threads {
        Some(0) => Err(anyhow::anyhow!(templia::Error::InvalidArgument(
            "--threads must be >= 1".into()
        ))),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(anyhow::Error::from)
            .and_then(|pool| pool.install(|| run(cli.command))),
        None => run(cli.command),
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("templia: {err:#}");
            ExitCode::from(commands::exit_code(&err) as u8)
        }
    }
}

use clap::Parser;
use twochar_cli::{main_with, JobSpec};

fn main() {
    let job = JobSpec::parse();
    std::process::exit(main_with(&job));
}

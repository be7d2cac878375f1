use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = pedal_locus::cli::run(std::env::args_os(), &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = e.message();
            eprintln!("error: {}", msg.trim_end().trim_start_matches("error: "));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

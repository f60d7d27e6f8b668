use std::io::Write;
use std::path::PathBuf;

use schubert::lr;

fn main() {
    let cache_dir = std::env::var_os("SCHUBERT_CACHE_DIR").map(PathBuf::from);
    if let Some(dir) = &cache_dir {
        if let Err(e) = lr::cache().attach_file(&dir.join("lr_cache.txt")) {
            eprintln!("warning: LR cache unavailable: {e}");
        }
    }
    let (code, out, err) = schubert::cli::run(std::env::args_os());
    if cache_dir.is_some() {
        if let Err(e) = lr::cache().flush() {
            eprintln!("warning: LR cache not written: {e}");
        }
    }
    print!("{out}");
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}

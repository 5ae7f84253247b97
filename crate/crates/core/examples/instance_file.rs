//! Parse an instance file and render the reports the CLI would print.

use std::path::PathBuf;

use jonquieres::cli::{cmd_implicitize, cmd_verify_cremona, Options};
use jonquieres::instance::InstanceFile;

fn main() -> jonquieres::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/p3.jonq"));
    let inst = InstanceFile::from_path(&path)?;
    print!("{}", cmd_verify_cremona(&inst)?.to_human());
    let opts = Options {
        oracle: true,
        ..Options::default()
    };
    print!("{}", cmd_implicitize(&inst, &opts)?.to_machine());
    Ok(())
}

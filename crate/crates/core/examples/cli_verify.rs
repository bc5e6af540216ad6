//! Drive the command line in-process: write a graph, verify it, read the
//! exit code.

use rainbow_core::cli;
use rainbow_core::graph::{save_graph, EdgeColoredGraph};

fn main() {
    let g = EdgeColoredGraph::from_edges([("a", "b", "1"), ("b", "c", "1"), ("c", "d", "2"), ("d", "a", "2")]).unwrap();
    let path = std::env::temp_dir().join("rainbow_cli_verify.json");
    std::fs::write(&path, save_graph(&g, None)).unwrap();
    let code = cli::run(["rainbow", "verify", "--graph", path.to_str().unwrap(), "--mode", "rc", "--algo", "brute"]);
    eprintln!("exit code {code}");
    std::fs::remove_file(path).ok();
}

// SPDX-License-Identifier: Apache-2.0

fn main() {
    std::process::exit(bisoft::cli::main());
}

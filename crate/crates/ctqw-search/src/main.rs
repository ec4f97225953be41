fn main() {
    // The harness parallelizes over trials; keep the BLAS backend
    // single-threaded underneath unless the user says otherwise.
    if std::env::var_os("OPENBLAS_NUM_THREADS").is_none() {
        std::env::set_var("OPENBLAS_NUM_THREADS", "1");
    }
    std::process::exit(ctqw_search::cli::run());
}

fn main() {
    // Die quietly when a downstream pipe closes (e.g. `gammakit … | head`),
    // like the usual line-oriented tools, instead of panicking on EPIPE.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(gammakit::cli::run(std::env::args_os()));
}

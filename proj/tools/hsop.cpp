#include "hsop/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    if (const char* dir = std::getenv("HSOP_CACHE_DIR"); dir && *dir) {
        hsop::PersistentStore::instance().set_directory(std::filesystem::path(dir));
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = hsop::cli::dispatch(std::move(args), &std::cin);
    std::cout << result.out << std::flush;
    std::cerr << result.err << std::flush;
    return result.exit_code;
}

#include <iostream>

#include "stoyanov/query.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> words(argv + 1, argv + argc);
    std::string out, err;
    const int code = stoyanov::cli::main_with(stoyanov::cli::join_args(words), out, err);
    std::cout << out;
    std::cerr << err;
    return code;
}

#include <iostream>
#include <string>
#include <vector>

#include "frob/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const frob::command_result result = frob::run(args);
    std::cout << result.stdout_payload;
    return result.exit_code;
}

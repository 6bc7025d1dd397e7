#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::cout << "stabcomb cli placeholder\n";
    return args.empty() ? 0 : 0;
}

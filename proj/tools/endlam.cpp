#include <endlam/cli.hpp>

int main(int argc, char** argv) { return endlam::run(argc, argv); }

#include "bagwhisker/pipeline.hpp"

int main(int argc, char** argv) { return bagwhisker::run_cli(argc, argv); }

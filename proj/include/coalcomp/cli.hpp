#pragma once
namespace coalcomp { int run_cli(int argc, char** argv); }

// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "jacobicode/cli.hpp"

int main(int argc, char** argv) { return jacobicode::run_cli(argc, argv, std::cout, std::cerr); }

// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "dyadic_tools/cli.hpp"

int main(int argc, char** argv) { return dyadic::cli::run(argc, argv, std::cout, std::cerr); }

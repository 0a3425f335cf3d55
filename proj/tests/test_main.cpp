// gtest entry point that also accepts "--seed N" (or --seed=N) for the property suites.
#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  testing::InitGoogleTest(&argc, argv);
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      setenv("SINGULENS_SEED", argv[++i], 1);
    } else if (arg.rfind("--seed=", 0) == 0) {
      setenv("SINGULENS_SEED", arg.c_str() + 7, 1);
    } else {
      rest.push_back(argv[i]);
    }
  }
  if (rest.size() > 1) {
    std::fprintf(stderr, "unknown argument: %s\n", rest[1]);
    return 2;
  }
  return RUN_ALL_TESTS();
}

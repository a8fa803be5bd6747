#include <iostream>

#include "homlie/cli.hpp"

int main(int argc, char **argv)
{
	return homlie::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

extern "C" { int trit_abi_placeholder(void); int trit_abi_placeholder(void){return 1;} }

// CLI entry point; wired up once the io module lands.
int main() { return 1; }

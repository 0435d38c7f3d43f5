def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long searches excluded from the default run"
    )

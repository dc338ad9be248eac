#!/usr/bin/env python3
"""Run the HTTP service.

Honours PENSIONLAB_ADDR (default 127.0.0.1:8080) and PENSIONLAB_DATA
(default ./scenarios.jsonl).
"""

from pensionlab import service

if __name__ == "__main__":
    service.run()

"""
Gunicorn configuration for the workbench HTTP surface
"""

import os

# Server socket
bind = f"0.0.0.0:{os.environ.get('PORT', 8080)}"
backlog = 2048

# Worker processes; each request is CPU-bound
workers = int(os.environ.get('WEB_CONCURRENCY', 2))
worker_class = "sync"
timeout = int(os.environ.get('GUNICORN_TIMEOUT', 300))
keepalive = 2

# Restart workers after this many requests to drop the per-process caches
max_requests = 200
max_requests_jitter = 20

# Logging
accesslog = "-"
errorlog = "-"
loglevel = os.environ.get('LOG_LEVEL', 'info').lower()

# Process naming
proc_name = 'valuta'

preload_app = True
daemon = False
